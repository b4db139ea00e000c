#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "crclab/code.hpp"
#include "crclab/gf2.hpp"

namespace crclab {

/// Bijection on 0..degree-1. Acting on a vector, coordinate j moves to
/// position (*this)(j); products compose right to left: (a * b)(j) = a(b(j)).
class Permutation {
 public:
  /// Throws std::invalid_argument when `image` is not a bijection.
  explicit Permutation(std::vector<std::uint32_t> image);

  static Permutation identity(std::size_t degree);
  static Permutation transposition(std::size_t degree, std::uint32_t a, std::uint32_t b);
  /// Cycle p_0 -> p_1 -> ... -> p_last -> p_0; other points fixed.
  static Permutation cycle(std::size_t degree, std::span<const std::uint32_t> points);

  [[nodiscard]] std::size_t degree() const { return image_.size(); }
  [[nodiscard]] std::uint32_t operator()(std::uint32_t j) const { return image_[j]; }
  [[nodiscard]] std::span<const std::uint32_t> image() const { return image_; }
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] Permutation inverse() const;

  [[nodiscard]] BitVector apply(const BitVector& x) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> image_;
};

/// {(0 1), (0 1 ... m-1)}, which generate the symmetric group S_m.
std::vector<Permutation> symmetric_group_generators(std::size_t m);

/// Coordinate permutation of H_m induced by relabelling rows with sigma:
/// the column of {i, j} goes to the column of {sigma(i), sigma(j)}.
Permutation induced_pair_permutation(std::size_t m, const Permutation& sigma);

/// Induced images of symmetric_group_generators(m).
std::vector<Permutation> induced_symmetric_generators(std::size_t m);

/// True when every generator row stays in the code after permuting.
bool preserves_code(const LinearCode& code, const Permutation& tau);

/// Action of code automorphisms on cosets, phi(x + C) = phi(x) + C, through
/// the stored coset leaders.
class CosetAction {
 public:
  explicit CosetAction(const CosetTable& table) : table_(&table) {}

  /// Only meaningful when tau preserves the code.
  [[nodiscard]] Syndrome apply(const Permutation& tau, Syndrome s) const;

 private:
  const CosetTable* table_;
};

/// Exhaustive check that weight(apply(tau, s)) = weight(s) for all s.
bool preserves_coset_weights(const CosetTable& table, const Permutation& tau);

struct OrbitPartition {
  std::size_t count = 0;
  /// Orbit ids are numbered by increasing smallest member.
  std::vector<std::uint32_t> orbit_of;
  std::vector<std::size_t> sizes;
  std::vector<Syndrome> representatives;
};

/// Orbits on all syndromes of the group generated by `generators`. Throws
/// std::invalid_argument if a generator does not preserve the code.
OrbitPartition coset_orbits(const LinearCode& code, const CosetTable& table,
                            std::span<const Permutation> generators);

struct TransitivityReport {
  bool completely_transitive = false;
  std::size_t orbits = 0;
  int rho = 0;
  /// Every orbit lies inside a single weight class.
  bool orbits_match_weight_classes = false;
  std::vector<std::size_t> orbit_sizes;
};

/// Orbit count equal to rho + 1 under a subgroup of Aut(C) already forces
/// complete transitivity of the full group.
TransitivityReport completely_transitive_check(const LinearCode& code, const CosetTable& table,
                                               std::span<const Permutation> generators);

bool is_completely_transitive(const LinearCode& code, const CosetTable& table,
                              std::span<const Permutation> generators);

struct DualCensus {
  std::size_t count = 0;
  /// Sorted ascending.
  std::vector<BitVector> codewords;
};

/// All codewords of the dual code (row space of H) of the given weight.
/// Throws GuardExceeded when n-k > max_redundancy.
DualCensus dual_low_weight_census(const LinearCode& code, std::size_t weight,
                                  std::size_t max_redundancy = kMaxTableRedundancy);

}  // namespace crclab
