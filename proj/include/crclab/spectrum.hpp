#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crclab/code.hpp"
#include "crclab/intersection_array.hpp"

namespace crclab {

struct Eigenvalue {
  long long value = 0;
  /// Known only for the character-sum oracle.
  std::optional<std::uint64_t> multiplicity;
  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/// Isolating interval for an irrational eigenvalue.
struct RootInterval {
  double lower = 0;
  double upper = 0;
};

struct SpectrumReport {
  std::string source;
  /// Integer eigenvalues, descending.
  std::vector<Eigenvalue> eigenvalues;
  /// Non-integer eigenvalues, ascending.
  std::vector<RootInterval> irrational;

  [[nodiscard]] std::set<long long> integer_values() const;
  [[nodiscard]] std::uint64_t total_multiplicity() const;
  /// Sum of value * multiplicity (the trace of the adjacency matrix).
  [[nodiscard]] long long weighted_sum() const;
};

inline constexpr const char* kCharacterSource = "character-sum";
inline constexpr const char* kIntersectionSource = "intersection-matrix";

/// Spectrum of the coset graph as a translation graph on F_2^(n-k):
/// lambda_u = sum over columns h of H of (-1)^(u.h), with multiplicities.
/// Throws GuardExceeded when n-k > max_redundancy.
SpectrumReport character_spectrum(const LinearCode& code, std::size_t max_redundancy = 20);

namespace serial {

SpectrumReport character_spectrum(const LinearCode& code, std::size_t max_redundancy = 20);

}  // namespace serial

/// Eigenvalues of the tridiagonal (rho+1) x (rho+1) intersection matrix
/// (sub-diagonal c_i, diagonal a_i, super-diagonal b_i) from its exact
/// characteristic polynomial. Integer roots are found exactly; any other
/// real roots are isolated by Sturm sequences.
SpectrumReport array_spectrum(const IntersectionArray& arr);

/// Characteristic polynomial coefficients of the intersection matrix,
/// constant term first; exposed for tests. Throws std::overflow_error if a
/// coefficient does not fit in 64 bits.
std::vector<long long> intersection_char_poly(const IntersectionArray& arr);

/// Integer sets equal and neither side has irrational eigenvalues.
bool same_eigenvalue_set(const SpectrumReport& a, const SpectrumReport& b);

/// binom(m,2) - 16 i (rho+1-i) for m = 2 mod 4 and binom(m,2) - 8 i (2 rho+1-i)
/// for m = 0 mod 4, i = 0..rho, rho = floor(m/4). Requires even m >= 6.
std::vector<long long> printed_eigenvalue_formula(std::size_t m);

struct FormulaAudit {
  std::vector<long long> formula;
  /// Oracle eigenvalues, descending.
  std::vector<long long> oracle;
  bool agrees = false;
  /// Values the formula lists that the oracle lacks.
  std::vector<long long> formula_only;
  /// Oracle values the formula misses.
  std::vector<long long> oracle_only;
};

/// Compares the printed formula with an oracle spectrum as sets. Reports,
/// never asserts.
FormulaAudit audit_eigenvalue_formula(std::size_t m, const SpectrumReport& oracle);

}  // namespace crclab
