#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crclab {

/// Dense vector over GF(2), packed 64 bits per word. Bits past size() are
/// always zero so word-wise comparison and popcount are exact.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length);

  static BitVector ones(std::size_t length);
  static BitVector unit(std::size_t length, std::size_t index);
  /// Bit i of the result is bit i of `word`; requires length <= 64.
  static BitVector from_word(std::uint64_t word, std::size_t length);
  /// Parses a string of '0'/'1' characters, position 0 first.
  static BitVector from_string(std::string_view bits);

  [[nodiscard]] std::size_t size() const { return length_; }
  [[nodiscard]] bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  [[nodiscard]] std::size_t weight() const;
  [[nodiscard]] bool is_zero() const;
  /// Inner product over GF(2).
  [[nodiscard]] bool dot(const BitVector& other) const;
  /// Packs into one word; requires size() <= 64.
  [[nodiscard]] std::uint64_t to_word() const;
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] std::vector<std::size_t> support() const;

  [[nodiscard]] std::span<const std::uint64_t> words() const { return words_; }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend std::strong_ordering operator<=>(const BitVector& lhs, const BitVector& rhs);

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row-major dense matrix over GF(2). A matrix may have zero rows (the
/// generator of the zero code) but always has a definite column count.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  /// All rows must share one length; `cols` is used when `rows` is empty.
  static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols = 0);
  static BitMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool empty() const { return rows_.empty() || cols_ == 0; }

  [[nodiscard]] bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool value) { rows_[i].set(j, value); }

  [[nodiscard]] const BitVector& row(std::size_t i) const { return rows_[i]; }
  [[nodiscard]] const std::vector<BitVector>& row_vectors() const { return rows_; }
  [[nodiscard]] BitVector column(std::size_t j) const;

  void append_row(BitVector row);
  void swap_rows(std::size_t a, std::size_t b);
  /// rows[target] ^= rows[source]
  void add_row(std::size_t source, std::size_t target);

  [[nodiscard]] BitMatrix transpose() const;
  [[nodiscard]] BitMatrix select_rows(std::span<const std::size_t> indices) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RrefResult {
  BitMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form with leftmost-pivot elimination. Zero rows sink
/// to the bottom; row order above them follows pivot order.
RrefResult rref(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column in increasing column
/// order. Each basis vector has a 1 in its own free column.
std::vector<BitVector> nullspace(const BitMatrix& m);

/// Throws std::invalid_argument if v.size() != m.cols().
BitVector mat_vec(const BitMatrix& m, const BitVector& v);

/// Greedy selection, in row order, of rows that are independent of the rows
/// already selected. The selected rows span the row space of `m`.
std::vector<std::size_t> independent_rows(const BitMatrix& m);

// Matrix text format: "rows cols" on the first line, then one line of 0/1
// characters per row.
void write_matrix(std::ostream& out, const BitMatrix& m);
BitMatrix read_matrix(std::istream& in);
std::string to_text(const BitMatrix& m);
BitMatrix matrix_from_text(std::string_view text);

}  // namespace crclab
