#include "crclab/code.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "crclab/errors.hpp"

namespace crclab {

namespace {

constexpr std::uint32_t kNoColumn = ~std::uint32_t{0};

void require_packable(std::size_t redundancy) {
  if (redundancy > kSyndromeBits) {
    throw GuardExceeded("syndrome width", redundancy, kSyndromeBits);
  }
}

BitMatrix nullspace_matrix(const BitMatrix& m) {
  return BitMatrix::from_rows(nullspace(m), m.cols());
}

}  // namespace

LinearCode::LinearCode(std::size_t n, BitMatrix generator, BitMatrix parity_check)
    : n_(n), generator_(std::move(generator)), parity_check_(std::move(parity_check)) {}

LinearCode LinearCode::from_parity_check(const BitMatrix& h_raw) {
  if (h_raw.cols() == 0) {
    throw std::invalid_argument("parity-check matrix has no columns");
  }
  const auto chosen = independent_rows(h_raw);
  BitMatrix h = h_raw.select_rows(chosen);
  BitMatrix g = h.rows() == 0 ? BitMatrix::identity(h_raw.cols()) : nullspace_matrix(h);
  return LinearCode(h_raw.cols(), std::move(g), std::move(h));
}

LinearCode LinearCode::from_generator(const BitMatrix& g_raw) {
  if (g_raw.cols() == 0) {
    throw std::invalid_argument("generator matrix has no columns");
  }
  const auto chosen = independent_rows(g_raw);
  BitMatrix g = g_raw.select_rows(chosen);
  BitMatrix h = g.rows() == 0 ? BitMatrix::identity(g_raw.cols()) : nullspace_matrix(g);
  return LinearCode(g_raw.cols(), std::move(g), std::move(h));
}

BitVector LinearCode::syndrome(const BitVector& x) const { return mat_vec(parity_check_, x); }

LinearCode LinearCode::from_matrices(BitMatrix g, BitMatrix h) {
  const std::size_t n = g.cols();
  if (n == 0 || h.cols() != n) {
    throw std::invalid_argument("generator and parity check must have equal nonzero width");
  }
  if (rank(g) != g.rows() || rank(h) != h.rows()) {
    throw std::invalid_argument("generator and parity check must have full row rank");
  }
  if (g.rows() + h.rows() != n) {
    throw std::invalid_argument("dimension plus redundancy must equal the length");
  }
  for (const auto& row : g.row_vectors()) {
    if (!mat_vec(h, row).is_zero()) {
      throw std::invalid_argument("generator row has nonzero syndrome");
    }
  }
  return LinearCode(n, std::move(g), std::move(h));
}

Syndrome LinearCode::syndrome_word(const BitVector& x) const {
  require_packable(redundancy());
  return static_cast<Syndrome>(syndrome(x).to_word());
}

std::vector<Syndrome> LinearCode::column_syndromes() const {
  require_packable(redundancy());
  std::vector<Syndrome> cols(n_, 0);
  for (std::size_t i = 0; i < parity_check_.rows(); ++i) {
    for (std::size_t j : parity_check_.row(i).support()) {
      cols[j] |= Syndrome{1} << i;
    }
  }
  return cols;
}

std::vector<std::size_t> CosetTable::leader_support(Syndrome s) const {
  std::vector<std::size_t> support;
  support.reserve(weight_[s]);
  while (s != 0) {
    const auto col = via_[s];
    support.push_back(col);
    s ^= columns_[col];
  }
  std::reverse(support.begin(), support.end());
  return support;
}

BitVector CosetTable::leader(Syndrome s) const {
  BitVector x(n_);
  for (auto j : leader_support(s)) {
    x.set(j, true);
  }
  return x;
}

CosetWeightDistribution CosetTable::distribution() const {
  CosetWeightDistribution dist;
  dist.counts.assign(static_cast<std::size_t>(covering_radius_) + 1, 0);
  for (auto w : weight_) {
    ++dist.counts[w];
  }
  return dist;
}

CosetTable build_coset_table(const LinearCode& code, std::size_t max_redundancy) {
  const std::size_t r = code.redundancy();
  const std::size_t limit = std::min(max_redundancy, kSyndromeBits);
  if (r > limit) {
    throw GuardExceeded("coset table (n-k)", r, limit);
  }
  CosetTable table;
  table.n_ = code.length();
  table.redundancy_ = r;
  table.columns_ = code.column_syndromes();

  const std::size_t size = std::size_t{1} << r;
  constexpr std::uint8_t kUnseen = 0xFF;
  table.weight_.assign(size, kUnseen);
  table.via_.assign(size, kNoColumn);
  table.weight_[0] = 0;

  std::vector<Syndrome> frontier{0};
  std::vector<Syndrome> next;
  std::size_t seen = 1;
  int level = 0;
  while (!frontier.empty()) {
    next.clear();
    for (auto s : frontier) {
      for (std::uint32_t j = 0; j < table.columns_.size(); ++j) {
        const Syndrome t = s ^ table.columns_[j];
        if (table.weight_[t] == kUnseen) {
          table.weight_[t] = static_cast<std::uint8_t>(level + 1);
          table.via_[t] = j;
          next.push_back(t);
        }
      }
    }
    if (next.empty()) {
      break;
    }
    seen += next.size();
    ++level;
    if (level >= kUnseen) {
      throw GuardExceeded("coset weight", static_cast<std::size_t>(level), kUnseen - 1);
    }
    frontier.swap(next);
  }
  // H has full rank, so its columns span syndrome space.
  if (seen != size) {
    throw std::logic_error("coset BFS did not reach every syndrome; parity check not full rank");
  }
  table.covering_radius_ = level;
  return table;
}

int covering_radius(const CosetTable& table) { return table.covering_radius(); }

std::optional<int> minimum_distance_upto(const LinearCode& code, int w_max) {
  if (w_max < 1 || w_max > 4) {
    throw std::invalid_argument("minimum_distance_upto supports 1 <= w_max <= 4");
  }
  // Columns as full bit vectors so any redundancy is supported.
  const BitMatrix ht = code.parity_check().transpose();
  const auto& cols = ht.row_vectors();
  const std::size_t n = cols.size();

  if (std::any_of(cols.begin(), cols.end(), [](const BitVector& c) { return c.is_zero(); })) {
    return 1;
  }
  if (w_max < 2) {
    return std::nullopt;
  }

  auto hash = [](const BitVector& v) {
    std::size_t h = 0;
    for (auto w : v.words()) {
      h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::uint64_t>{}(w);
    }
    return h;
  };
  std::unordered_map<BitVector, std::size_t, decltype(hash)> first_index(n, hash);
  for (std::size_t j = 0; j < n; ++j) {
    if (!first_index.emplace(cols[j], j).second) {
      return 2;
    }
  }
  if (w_max < 3) {
    return std::nullopt;
  }

  // Columns are distinct and nonzero here, so a hit h_i + h_j = h_l has l
  // distinct from i and j.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (first_index.contains(cols[i] ^ cols[j])) {
        return 3;
      }
    }
  }
  if (w_max < 4) {
    return std::nullopt;
  }

  // Two pairs with equal sums are disjoint, since columns are distinct.
  std::unordered_set<BitVector, decltype(hash)> pair_sums(n * n / 2 + 1, hash);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!pair_sums.insert(cols[i] ^ cols[j]).second) {
        return 4;
      }
    }
  }
  return std::nullopt;
}

CoveringSetReport is_nonantipodal_with_coset_cover(const LinearCode& code,
                                                   const CosetTable& table) {
  CoveringSetReport report;
  report.all_ones_syndrome = code.syndrome_word(BitVector::ones(code.length()));
  const int rho = table.covering_radius();
  const auto weights = table.weights();
  for (std::size_t s = 0; s < weights.size(); ++s) {
    if (weights[s] == rho) {
      ++report.covering_cosets;
      if (!report.witness) {
        report.witness = static_cast<Syndrome>(s);
      }
    }
  }
  report.nonantipodal = report.covering_cosets == 1;
  if (!report.nonantipodal) {
    report.witness.reset();
  } else {
    report.witness_is_all_ones = *report.witness == report.all_ones_syndrome;
  }
  return report;
}

LinearCode union_with_covering_set(const LinearCode& code, const CosetTable& table) {
  const auto cover = is_nonantipodal_with_coset_cover(code, table);
  if (!cover.nonantipodal) {
    throw std::invalid_argument("union not linear: covering set C(rho) is not a single coset (" +
                                std::to_string(cover.covering_cosets) + " cosets of weight rho)");
  }
  if (!cover.witness_is_all_ones || cover.all_ones_syndrome == 0) {
    throw std::invalid_argument("union not a coset extension: covering set is not C + 1");
  }
  BitMatrix g = code.generator();
  g.append_row(BitVector::ones(code.length()));
  return LinearCode::from_generator(g);
}

LinearCode extend_with_parity(const LinearCode& code) {
  const std::size_t n = code.length();
  BitMatrix g(0, n + 1);
  for (const auto& row : code.generator().row_vectors()) {
    BitVector extended(n + 1);
    for (auto j : row.support()) {
      extended.set(j, true);
    }
    extended.set(n, (row.weight() & 1U) != 0);
    g.append_row(std::move(extended));
  }
  return LinearCode::from_generator(g);
}

TranslateView coset_distance_profile_of_translate(const LinearCode& code, const CosetTable& table,
                                                  const BitVector& t) {
  return TranslateView(table, code.syndrome_word(t));
}

void write_code(std::ostream& out, const LinearCode& code) {
  out << code.length() << ' ' << code.dimension() << '\n';
  write_matrix(out, code.generator());
  write_matrix(out, code.parity_check());
}

LinearCode read_code(std::istream& in) {
  std::size_t n = 0;
  std::size_t k = 0;
  if (!(in >> n >> k)) {
    throw std::invalid_argument("code file: missing 'n k' header");
  }
  BitMatrix g = read_matrix(in);
  BitMatrix h = read_matrix(in);
  if (g.cols() != n || h.cols() != n || g.rows() != k) {
    throw std::invalid_argument("code file: matrix shapes do not match header");
  }
  return LinearCode::from_matrices(std::move(g), std::move(h));
}

}  // namespace crclab
