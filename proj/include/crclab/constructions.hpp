#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "crclab/code.hpp"
#include "crclab/gf2.hpp"
#include "crclab/intersection_array.hpp"

namespace crclab {

/// Bijection between column positions and 2-subsets {i, j} of {0..m-1},
/// in lexicographic order: {0,1}, {0,2}, ..., {0,m-1}, {1,2}, ...
class PairIndex {
 public:
  explicit PairIndex(std::size_t m);

  [[nodiscard]] std::size_t m() const { return m_; }
  [[nodiscard]] std::size_t size() const { return m_ * (m_ - 1) / 2; }
  /// Position of {i, j}; order of the arguments does not matter.
  [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const;
  /// The pair at `position`, smaller element first.
  [[nodiscard]] std::pair<std::size_t, std::size_t> pair(std::size_t position) const;

 private:
  std::size_t m_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/// m x binom(m,2) matrix whose columns are all weight-2 vectors of length m,
/// in PairIndex order. Throws std::invalid_argument for m < 3.
BitMatrix build_hm(std::size_t m);

/// The code with parity-check matrix H_m.
LinearCode build_cm(std::size_t m);

/// Generator in block form: one weight-3 row per pair {i,j} of {0..m-2}
/// (ones at {i,j}, {i,m-1}, {j,m-1}), then the row with ones on every pair
/// containing m-1. Coordinates are in PairIndex order for m.
BitMatrix block_union_generator(std::size_t m);

/// C^(m) together with its covering set C^(m) + 1, for even m >= 6. The
/// result is checked against the block-form generator and a mismatch throws
/// std::logic_error. Odd m throws std::invalid_argument.
LinearCode build_cm_union(std::size_t m);

/// True when both codes have the same length and each generator row of
/// either code has zero syndrome in the other.
bool same_code(const LinearCode& a, const LinearCode& b);

struct ClosedFormSpec {
  std::size_t n = 0;
  std::size_t k = 0;
  int d = 0;
  int rho = 0;
  IntersectionArray array;
};

/// n = binom(m,2), k = n-m+1, d = 3, rho = floor(m/2),
/// b_i = binom(m-2i, 2), c_i = binom(2i, 2).
ClosedFormSpec closed_form_cm(std::size_t m);

/// n = binom(m,2), k = n-m+2, d = 3, rho = floor(m/4), with the last c
/// doubled when m = 0 mod 4. Requires even m >= 6.
ClosedFormSpec closed_form_cm_union(std::size_t m);

}  // namespace crclab
