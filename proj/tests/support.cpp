#include "support.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace crclab::testing {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  std::bernoulli_distribution bit(0.5);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m.set(i, j, bit(rng));
    }
  }
  return m;
}

std::size_t column_space_size(const BitMatrix& m) {
  if (m.rows() > 20) {
    throw std::invalid_argument("too many rows");
  }
  std::vector<std::uint64_t> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    cols.push_back(m.column(j).to_word());
  }
  std::vector<bool> seen(std::size_t{1} << m.rows(), false);
  std::deque<std::uint64_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto c : cols) {
      if (!seen[v ^ c]) {
        seen[v ^ c] = true;
        ++count;
        queue.push_back(v ^ c);
      }
    }
  }
  return count;
}

std::vector<BitVector> all_codewords(const LinearCode& code) {
  const auto& g = code.generator();
  if (g.rows() > 20) {
    throw std::invalid_argument("too many codewords");
  }
  std::vector<BitVector> words;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.rows()); ++mask) {
    BitVector w(code.length());
    for (std::size_t i = 0; i < g.rows(); ++i) {
      if ((mask >> i) & 1U) {
        w ^= g.row(i);
      }
    }
    words.push_back(std::move(w));
  }
  return words;
}

std::vector<std::uint8_t> brute_distances(const LinearCode& code) {
  const std::size_t n = code.length();
  if (n > 20) {
    throw std::invalid_argument("length too large");
  }
  std::vector<std::uint8_t> dist(std::size_t{1} << n, 0xFF);
  std::deque<std::uint32_t> queue;
  for (const auto& w : all_codewords(code)) {
    const auto x = static_cast<std::uint32_t>(w.to_word());
    dist[x] = 0;
    queue.push_back(x);
  }
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      const auto y = x ^ (std::uint32_t{1} << j);
      if (dist[y] == 0xFF) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::optional<IntersectionArray> brute_intersection_array(const LinearCode& code) {
  const std::size_t n = code.length();
  const auto dist = brute_distances(code);
  int rho = 0;
  for (auto d : dist) {
    rho = std::max<int>(rho, d);
  }
  std::vector<int> b(rho + 1, -1);
  std::vector<int> c(rho + 1, -1);
  for (std::uint32_t x = 0; x < dist.size(); ++x) {
    const int l = dist[x];
    int up = 0;
    int down = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const int dl = dist[x ^ (std::uint32_t{1} << j)];
      up += dl == l + 1;
      down += dl == l - 1;
    }
    if (b[l] < 0) {
      b[l] = up;
      c[l] = down;
    } else if (b[l] != up || c[l] != down) {
      return std::nullopt;
    }
  }
  IntersectionArray arr;
  arr.valency = static_cast<int>(n);
  arr.b.assign(b.begin(), b.end() - 1);
  arr.c.assign(c.begin() + 1, c.end());
  return arr;
}

}  // namespace crclab::testing
