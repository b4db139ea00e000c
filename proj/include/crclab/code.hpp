#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "crclab/gf2.hpp"

namespace crclab {

/// Syndromes are packed integers: bit i is the parity against row i of the
/// full-rank parity-check matrix.
using Syndrome = std::uint32_t;

/// Largest redundancy n-k for which a total coset table is built.
inline constexpr std::size_t kMaxTableRedundancy = 24;
/// Hard ceiling imposed by the Syndrome type, regardless of overrides.
inline constexpr std::size_t kSyndromeBits = 30;

/// Binary linear [n,k] code carrying a k x n generator and a full-rank
/// (n-k) x n parity-check matrix.
class LinearCode {
 public:
  /// H is the in-order independent row selection of `h_raw`; G is the
  /// nullspace basis of H.
  static LinearCode from_parity_check(const BitMatrix& h_raw);
  /// G is the in-order independent row selection of `g_raw`; H is the
  /// nullspace basis of G.
  static LinearCode from_generator(const BitMatrix& g_raw);
  /// Takes G and H as given. Throws std::invalid_argument unless both have
  /// full row rank, dimensions add up to n, and G H^T = 0.
  static LinearCode from_matrices(BitMatrix g, BitMatrix h);

  [[nodiscard]] std::size_t length() const { return n_; }
  [[nodiscard]] std::size_t dimension() const { return generator_.rows(); }
  [[nodiscard]] std::size_t redundancy() const { return parity_check_.rows(); }

  [[nodiscard]] const BitMatrix& generator() const { return generator_; }
  [[nodiscard]] const BitMatrix& parity_check() const { return parity_check_; }

  [[nodiscard]] BitVector syndrome(const BitVector& x) const;
  /// Packed syndrome; requires redundancy() <= kSyndromeBits.
  [[nodiscard]] Syndrome syndrome_word(const BitVector& x) const;
  [[nodiscard]] bool contains(const BitVector& x) const { return syndrome(x).is_zero(); }

  /// Column j of H packed as a Syndrome; requires redundancy() <= kSyndromeBits.
  [[nodiscard]] std::vector<Syndrome> column_syndromes() const;

 private:
  LinearCode(std::size_t n, BitMatrix generator, BitMatrix parity_check);

  std::size_t n_ = 0;
  BitMatrix generator_;
  BitMatrix parity_check_;
};

/// Per-weight syndrome counts; entry i counts the cosets of weight i.
struct CosetWeightDistribution {
  std::vector<std::uint64_t> counts;
  friend bool operator==(const CosetWeightDistribution&, const CosetWeightDistribution&) = default;
};

/// Total map syndrome -> (coset weight, coset leader), built by breadth-first
/// search over syndrome space with the columns of H as generators. The
/// leader of each coset is recovered from the BFS tree.
class CosetTable {
 public:
  [[nodiscard]] std::size_t length() const { return n_; }
  [[nodiscard]] std::size_t redundancy() const { return redundancy_; }
  [[nodiscard]] std::size_t size() const { return weight_.size(); }

  [[nodiscard]] int weight(Syndrome s) const { return weight_[s]; }
  [[nodiscard]] std::span<const std::uint8_t> weights() const { return weight_; }
  [[nodiscard]] std::span<const Syndrome> columns() const { return columns_; }

  /// Coordinates of the BFS-tree coset leader, in the order they were added.
  [[nodiscard]] std::vector<std::size_t> leader_support(Syndrome s) const;
  [[nodiscard]] BitVector leader(Syndrome s) const;

  [[nodiscard]] int covering_radius() const { return covering_radius_; }
  [[nodiscard]] CosetWeightDistribution distribution() const;

 private:
  friend CosetTable build_coset_table(const LinearCode& code, std::size_t max_redundancy);

  std::size_t n_ = 0;
  std::size_t redundancy_ = 0;
  int covering_radius_ = 0;
  std::vector<Syndrome> columns_;
  std::vector<std::uint8_t> weight_;
  // Column index added last on the BFS path to each syndrome; unused at 0.
  std::vector<std::uint32_t> via_;
};

/// Throws GuardExceeded when n-k > max_redundancy.
CosetTable build_coset_table(const LinearCode& code,
                             std::size_t max_redundancy = kMaxTableRedundancy);

int covering_radius(const CosetTable& table);

/// Smallest w <= w_max such that some w columns of H sum to zero, i.e. the
/// minimum distance when it is at most w_max. Returns nullopt when d > w_max.
/// Requires w_max <= 4.
std::optional<int> minimum_distance_upto(const LinearCode& code, int w_max);

struct CoveringSetReport {
  /// Exactly one syndrome attains the covering radius.
  bool nonantipodal = false;
  std::size_t covering_cosets = 0;
  std::optional<Syndrome> witness;
  /// The covering coset is C + 1.
  bool witness_is_all_ones = false;
  Syndrome all_ones_syndrome = 0;
};

CoveringSetReport is_nonantipodal_with_coset_cover(const LinearCode& code,
                                                   const CosetTable& table);

/// C u C(rho) when C(rho) = C + 1: the code generated by G and the all-ones
/// row. Throws std::invalid_argument when the covering set is not C + 1.
LinearCode union_with_covering_set(const LinearCode& code, const CosetTable& table);

/// Appends an overall parity coordinate to every codeword.
LinearCode extend_with_parity(const LinearCode& code);

/// Coset weights measured against the translate C + t: d(x, C + t) is the
/// weight of syndrome(x) + syndrome(t).
class TranslateView {
 public:
  TranslateView(const CosetTable& table, Syndrome shift) : table_(&table), shift_(shift) {}

  [[nodiscard]] int weight(Syndrome s) const { return table_->weight(s ^ shift_); }
  [[nodiscard]] Syndrome shift() const { return shift_; }
  [[nodiscard]] const CosetTable& table() const { return *table_; }

 private:
  const CosetTable* table_;
  Syndrome shift_;
};

TranslateView coset_distance_profile_of_translate(const LinearCode& code, const CosetTable& table,
                                                  const BitVector& t);

// Code file: "n k" header line followed by the G block and the H block in
// matrix text format.
void write_code(std::ostream& out, const LinearCode& code);
LinearCode read_code(std::istream& in);

}  // namespace crclab
