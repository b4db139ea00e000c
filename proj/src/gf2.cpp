#include "crclab/gf2.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace crclab {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

BitVector BitVector::ones(std::size_t length) {
  BitVector v(length);
  for (std::size_t w = 0; w < v.words_.size(); ++w) {
    v.words_[w] = ~std::uint64_t{0};
  }
  if (length % 64 != 0) {
    v.words_.back() = (std::uint64_t{1} << (length % 64)) - 1;
  }
  return v;
}

BitVector BitVector::unit(std::size_t length, std::size_t index) {
  if (index >= length) {
    throw std::out_of_range("BitVector::unit index out of range");
  }
  BitVector v(length);
  v.set(index, true);
  return v;
}

BitVector BitVector::from_word(std::uint64_t word, std::size_t length) {
  if (length > 64) {
    throw std::invalid_argument("BitVector::from_word requires length <= 64");
  }
  BitVector v(length);
  if (length == 0) {
    return v;
  }
  if (length < 64) {
    word &= (std::uint64_t{1} << length) - 1;
  }
  v.words_[0] = word;
  return v;
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
  }
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

std::size_t BitVector::weight() const {
  std::size_t total = 0;
  for (auto w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BitVector::dot(const BitVector& other) const {
  if (other.length_ != length_) {
    throw std::invalid_argument("BitVector::dot length mismatch");
  }
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    acc ^= words_[w] & other.words_[w];
  }
  return (std::popcount(acc) & 1) != 0;
}

std::uint64_t BitVector::to_word() const {
  if (length_ > 64) {
    throw std::invalid_argument("BitVector::to_word requires length <= 64");
  }
  return words_.empty() ? 0 : words_[0];
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) {
      s[i] = '1';
    }
  }
  return s;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.length_ != length_) {
    throw std::invalid_argument("BitVector xor length mismatch");
  }
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
  return *this;
}

std::strong_ordering operator<=>(const BitVector& lhs, const BitVector& rhs) {
  if (auto c = lhs.length_ <=> rhs.length_; c != 0) {
    return c;
  }
  // Lexicographic on the 0/1 string, position 0 most significant.
  for (std::size_t i = 0; i < lhs.length_; ++i) {
    if (lhs.get(i) != rhs.get(i)) {
      return lhs.get(i) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
  BitMatrix m;
  m.cols_ = rows.empty() ? cols : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != m.cols_) {
      throw std::invalid_argument("BitMatrix::from_rows rows differ in length");
    }
  }
  m.rows_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i, true);
  }
  return m;
}

BitVector BitMatrix::column(std::size_t j) const {
  BitVector c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].get(j)) {
      c.set(i, true);
    }
  }
  return c;
}

void BitMatrix::append_row(BitVector row) {
  if (rows_.empty() && cols_ == 0) {
    cols_ = row.size();
  }
  if (row.size() != cols_) {
    throw std::invalid_argument("BitMatrix::append_row length mismatch");
  }
  rows_.push_back(std::move(row));
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }

void BitMatrix::add_row(std::size_t source, std::size_t target) { rows_[target] ^= rows_[source]; }

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j : rows_[i].support()) {
      t.set(j, i, true);
    }
  }
  return t;
}

BitMatrix BitMatrix::select_rows(std::span<const std::size_t> indices) const {
  std::vector<BitVector> out;
  out.reserve(indices.size());
  for (auto i : indices) {
    out.push_back(rows_.at(i));
  }
  return from_rows(std::move(out), cols_);
}

RrefResult rref(const BitMatrix& m) {
  RrefResult result{m, 0, {}};
  BitMatrix& r = result.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < r.rows() && !r.get(found, col)) {
      ++found;
    }
    if (found == r.rows()) {
      continue;
    }
    r.swap_rows(found, pivot_row);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i != pivot_row && r.get(i, col)) {
        r.add_row(pivot_row, i);
      }
    }
    result.pivot_columns.push_back(col);
    ++pivot_row;
  }
  result.rank = pivot_row;
  return result;
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

std::vector<BitVector> nullspace(const BitMatrix& m) {
  const auto [reduced, r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) {
    is_pivot[p] = true;
  }
  std::vector<BitVector> basis;
  basis.reserve(m.cols() - r);
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) {
      continue;
    }
    BitVector v(m.cols());
    v.set(free, true);
    for (std::size_t i = 0; i < r; ++i) {
      if (reduced.get(i, free)) {
        v.set(pivots[i], true);
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

BitVector mat_vec(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.cols()) {
    throw std::invalid_argument("mat_vec: vector length " + std::to_string(v.size()) +
                                " does not match matrix columns " + std::to_string(m.cols()));
  }
  BitVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.row(i).dot(v)) {
      out.set(i, true);
    }
  }
  return out;
}

std::vector<std::size_t> independent_rows(const BitMatrix& m) {
  // Incremental echelon basis keyed by pivot column.
  std::vector<BitVector> basis;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BitVector v = m.row(i);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (v.get(pivots[b])) {
        v ^= basis[b];
      }
    }
    if (v.is_zero()) {
      continue;
    }
    const auto support = v.support();
    basis.push_back(std::move(v));
    pivots.push_back(support.front());
    chosen.push_back(i);
  }
  return chosen;
}

void write_matrix(std::ostream& out, const BitMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (const auto& r : m.row_vectors()) {
    out << r.to_string() << '\n';
  }
}

BitMatrix read_matrix(std::istream& in) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  if (!(in >> rows >> cols)) {
    throw std::invalid_argument("matrix text: missing 'rows cols' header");
  }
  std::vector<BitVector> data;
  data.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    std::string line;
    if (!(in >> line)) {
      throw std::invalid_argument("matrix text: expected " + std::to_string(rows) + " rows, got " +
                                  std::to_string(i));
    }
    if (line.size() != cols) {
      throw std::invalid_argument("matrix text: row " + std::to_string(i) + " has length " +
                                  std::to_string(line.size()) + ", expected " +
                                  std::to_string(cols));
    }
    data.push_back(BitVector::from_string(line));
  }
  return BitMatrix::from_rows(std::move(data), cols);
}

std::string to_text(const BitMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

BitMatrix matrix_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_matrix(in);
}

}  // namespace crclab
