#include "crclab/constructions.hpp"

#include <stdexcept>
#include <string>

namespace crclab {

namespace {

void require_union_m(std::size_t m) {
  if (m % 2 != 0) {
    throw std::invalid_argument("m must be even: C^(m) is antipodal for odd m, so the union is "
                                "not a coset extension");
  }
  if (m < 6) {
    throw std::invalid_argument("m must be at least 6 for the union family");
  }
}

}  // namespace

PairIndex::PairIndex(std::size_t m) : m_(m) {
  if (m < 2) {
    throw std::invalid_argument("PairIndex needs m >= 2");
  }
  pairs_.reserve(size());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      pairs_.emplace_back(i, j);
    }
  }
}

std::size_t PairIndex::index(std::size_t i, std::size_t j) const {
  if (i > j) {
    std::swap(i, j);
  }
  if (i == j || j >= m_) {
    throw std::out_of_range("PairIndex::index needs two distinct points below m");
  }
  return i * (2 * m_ - i - 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> PairIndex::pair(std::size_t position) const {
  return pairs_.at(position);
}

BitMatrix build_hm(std::size_t m) {
  if (m < 3) {
    throw std::invalid_argument("H_m needs m >= 3, got " + std::to_string(m));
  }
  const PairIndex pairs(m);
  BitMatrix h(m, pairs.size());
  for (std::size_t col = 0; col < pairs.size(); ++col) {
    const auto [i, j] = pairs.pair(col);
    h.set(i, col, true);
    h.set(j, col, true);
  }
  return h;
}

LinearCode build_cm(std::size_t m) { return LinearCode::from_parity_check(build_hm(m)); }

BitMatrix block_union_generator(std::size_t m) {
  require_union_m(m);
  const PairIndex pairs(m);
  const std::size_t last = m - 1;
  BitMatrix g(0, pairs.size());
  // [ I | H_{m-1}^T ] rows.
  for (std::size_t i = 0; i < last; ++i) {
    for (std::size_t j = i + 1; j < last; ++j) {
      BitVector row(pairs.size());
      row.set(pairs.index(i, j), true);
      row.set(pairs.index(i, last), true);
      row.set(pairs.index(j, last), true);
      g.append_row(std::move(row));
    }
  }
  // [ 0 ... 0 | 1 ... 1 ]
  BitVector tail(pairs.size());
  for (std::size_t i = 0; i < last; ++i) {
    tail.set(pairs.index(i, last), true);
  }
  g.append_row(std::move(tail));
  return g;
}

LinearCode build_cm_union(std::size_t m) {
  require_union_m(m);
  const LinearCode base = build_cm(m);
  const CosetTable table = build_coset_table(base);
  LinearCode joined = union_with_covering_set(base, table);
  const LinearCode block = LinearCode::from_generator(block_union_generator(m));
  if (!same_code(joined, block)) {
    throw std::logic_error("C^[" + std::to_string(m) +
                           "] differs from the code generated by the block-form generator");
  }
  return joined;
}

bool same_code(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length() || a.dimension() != b.dimension()) {
    return false;
  }
  for (const auto& row : a.generator().row_vectors()) {
    if (!b.contains(row)) {
      return false;
    }
  }
  for (const auto& row : b.generator().row_vectors()) {
    if (!a.contains(row)) {
      return false;
    }
  }
  return true;
}

ClosedFormSpec closed_form_cm(std::size_t m) {
  if (m < 3) {
    throw std::invalid_argument("closed form needs m >= 3");
  }
  const auto mm = static_cast<long long>(m);
  ClosedFormSpec spec;
  spec.n = static_cast<std::size_t>(binomial(mm, 2));
  spec.k = spec.n - m + 1;
  spec.d = 3;
  spec.rho = static_cast<int>(m / 2);
  spec.array.valency = static_cast<int>(spec.n);
  for (int i = 0; i < spec.rho; ++i) {
    spec.array.b.push_back(static_cast<int>(binomial(mm - 2 * i, 2)));
  }
  for (int i = 1; i <= spec.rho; ++i) {
    spec.array.c.push_back(static_cast<int>(binomial(2 * i, 2)));
  }
  return spec;
}

ClosedFormSpec closed_form_cm_union(std::size_t m) {
  require_union_m(m);
  const auto mm = static_cast<long long>(m);
  ClosedFormSpec spec;
  spec.n = static_cast<std::size_t>(binomial(mm, 2));
  spec.k = spec.n - m + 2;
  spec.d = 3;
  spec.rho = static_cast<int>(m / 4);
  spec.array.valency = static_cast<int>(spec.n);
  for (int i = 0; i < spec.rho; ++i) {
    spec.array.b.push_back(static_cast<int>(binomial(mm - 2 * i, 2)));
  }
  for (int i = 1; i <= spec.rho; ++i) {
    spec.array.c.push_back(static_cast<int>(binomial(2 * i, 2)));
  }
  if (m % 4 == 0) {
    spec.array.c.back() = static_cast<int>(2 * binomial(2 * spec.rho, 2));
  }
  return spec;
}

}  // namespace crclab
