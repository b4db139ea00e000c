#include "crclab/transitivity.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "crclab/constructions.hpp"
#include "crclab/errors.hpp"
#include "crclab/parallel.hpp"
#include "crclab/union_find.hpp"

namespace crclab {

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (auto v : image_) {
    if (v >= image_.size() || hit[v]) {
      throw std::invalid_argument("permutation image is not a bijection");
    }
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> image(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    image[i] = static_cast<std::uint32_t>(i);
  }
  return Permutation(std::move(image));
}

Permutation Permutation::transposition(std::size_t degree, std::uint32_t a, std::uint32_t b) {
  auto p = identity(degree);
  std::swap(p.image_.at(a), p.image_.at(b));
  return p;
}

Permutation Permutation::cycle(std::size_t degree, std::span<const std::uint32_t> points) {
  auto p = identity(degree);
  for (std::size_t i = 0; i < points.size(); ++i) {
    p.image_.at(points[i]) = points[(i + 1) % points.size()];
  }
  return Permutation(std::move(p.image_));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    inv[image_[i]] = static_cast<std::uint32_t>(i);
  }
  return Permutation(std::move(inv));
}

BitVector Permutation::apply(const BitVector& x) const {
  if (x.size() != image_.size()) {
    throw std::invalid_argument("permutation degree does not match vector length");
  }
  BitVector out(x.size());
  for (auto j : x.support()) {
    out.set(image_[j], true);
  }
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("composing permutations of different degree");
  }
  std::vector<std::uint32_t> image(a.degree());
  for (std::size_t j = 0; j < image.size(); ++j) {
    image[j] = a.image_[b.image_[j]];
  }
  return Permutation(std::move(image));
}

std::vector<Permutation> symmetric_group_generators(std::size_t m) {
  std::vector<std::uint32_t> all(m);
  for (std::size_t i = 0; i < m; ++i) {
    all[i] = static_cast<std::uint32_t>(i);
  }
  return {Permutation::transposition(m, 0, 1), Permutation::cycle(m, all)};
}

Permutation induced_pair_permutation(std::size_t m, const Permutation& sigma) {
  if (sigma.degree() != m) {
    throw std::invalid_argument("sigma must act on m points");
  }
  const PairIndex pairs(m);
  std::vector<std::uint32_t> image(pairs.size());
  for (std::size_t col = 0; col < pairs.size(); ++col) {
    const auto [i, j] = pairs.pair(col);
    image[col] = static_cast<std::uint32_t>(
        pairs.index(sigma(static_cast<std::uint32_t>(i)), sigma(static_cast<std::uint32_t>(j))));
  }
  return Permutation(std::move(image));
}

std::vector<Permutation> induced_symmetric_generators(std::size_t m) {
  std::vector<Permutation> out;
  for (const auto& g : symmetric_group_generators(m)) {
    out.push_back(induced_pair_permutation(m, g));
  }
  return out;
}

bool preserves_code(const LinearCode& code, const Permutation& tau) {
  if (tau.degree() != code.length()) {
    throw std::invalid_argument("permutation degree must equal the code length");
  }
  return std::all_of(code.generator().row_vectors().begin(), code.generator().row_vectors().end(),
                     [&](const BitVector& row) { return code.contains(tau.apply(row)); });
}

Syndrome CosetAction::apply(const Permutation& tau, Syndrome s) const {
  const auto columns = table_->columns();
  Syndrome out = 0;
  for (auto j : table_->leader_support(s)) {
    out ^= columns[tau(static_cast<std::uint32_t>(j))];
  }
  return out;
}

bool preserves_coset_weights(const CosetTable& table, const Permutation& tau) {
  const CosetAction action(table);
  const auto size = static_cast<std::int64_t>(table.size());
  std::int64_t bad = 0;
#pragma omp parallel for reduction(+ : bad) schedule(static) num_threads(thread_count())
  for (std::int64_t s = 0; s < size; ++s) {
    const auto syn = static_cast<Syndrome>(s);
    bad += static_cast<std::int64_t>(table.weight(action.apply(tau, syn)) != table.weight(syn));
  }
  return bad == 0;
}

OrbitPartition coset_orbits(const LinearCode& code, const CosetTable& table,
                            std::span<const Permutation> generators) {
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (!preserves_code(code, generators[g])) {
      throw std::invalid_argument("generator " + std::to_string(g) + " does not preserve the code");
    }
  }
  const CosetAction action(table);
  UnionFind sets(table.size());
  for (const auto& tau : generators) {
    for (std::size_t s = 0; s < table.size(); ++s) {
      const auto syn = static_cast<Syndrome>(s);
      sets.unite(syn, action.apply(tau, syn));
    }
  }

  OrbitPartition out;
  out.orbit_of.assign(table.size(), 0);
  constexpr std::uint32_t kUnassigned = ~std::uint32_t{0};
  std::vector<std::uint32_t> id_of_root(table.size(), kUnassigned);
  for (std::size_t s = 0; s < table.size(); ++s) {
    const auto root = sets.find(static_cast<std::uint32_t>(s));
    if (id_of_root[root] == kUnassigned) {
      id_of_root[root] = static_cast<std::uint32_t>(out.count++);
      out.sizes.push_back(0);
      out.representatives.push_back(static_cast<Syndrome>(s));
    }
    out.orbit_of[s] = id_of_root[root];
    ++out.sizes[id_of_root[root]];
  }
  return out;
}

TransitivityReport completely_transitive_check(const LinearCode& code, const CosetTable& table,
                                               std::span<const Permutation> generators) {
  const auto orbits = coset_orbits(code, table, generators);
  TransitivityReport report;
  report.orbits = orbits.count;
  report.rho = table.covering_radius();
  report.orbit_sizes = orbits.sizes;

  std::vector<int> orbit_weight(orbits.count, -1);
  bool pure = true;
  for (std::size_t s = 0; s < table.size(); ++s) {
    auto& w = orbit_weight[orbits.orbit_of[s]];
    const int ws = table.weight(static_cast<Syndrome>(s));
    if (w < 0) {
      w = ws;
    } else if (w != ws) {
      pure = false;
    }
  }
  report.orbits_match_weight_classes = pure;
  report.completely_transitive =
      pure && orbits.count == static_cast<std::size_t>(report.rho) + 1;
  return report;
}

bool is_completely_transitive(const LinearCode& code, const CosetTable& table,
                              std::span<const Permutation> generators) {
  return completely_transitive_check(code, table, generators).completely_transitive;
}

DualCensus dual_low_weight_census(const LinearCode& code, std::size_t weight,
                                  std::size_t max_redundancy) {
  const std::size_t r = code.redundancy();
  const std::size_t limit = std::min(max_redundancy, kSyndromeBits);
  if (r > limit) {
    throw GuardExceeded("dual code enumeration (n-k)", r, limit);
  }
  const auto& rows = code.parity_check().row_vectors();
  DualCensus census;
  // Gray-code walk over all 2^r combinations of the rows of H.
  BitVector current(code.length());
  const std::uint64_t total = std::uint64_t{1} << r;
  for (std::uint64_t i = 1; i < total; ++i) {
    current ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    if (current.weight() == weight) {
      census.codewords.push_back(current);
    }
  }
  if (weight == 0) {
    census.codewords.emplace_back(code.length());
  }
  std::sort(census.codewords.begin(), census.codewords.end());
  census.count = census.codewords.size();
  return census;
}

}  // namespace crclab
