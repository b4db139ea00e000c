#include "crclab/graph.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "crclab/errors.hpp"
#include "crclab/parallel.hpp"
#include "crclab/union_find.hpp"

namespace crclab {

namespace {

void require_vertex_guard(const Graph& g, std::size_t max_vertices) {
  if (g.vertex_count() > max_vertices) {
    throw GuardExceeded("all-pairs graph check (vertices)", g.vertex_count(), max_vertices);
  }
}

struct PairCounts {
  std::uint8_t distance = 0;
  int c = 0;
  int b = 0;
};

/// Counts for every target of one BFS source, written into `out`.
void source_counts(const Graph& g, Vertex source, std::span<PairCounts> out) {
  const auto dist = bfs_distances(g, source);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int d = dist[v];
    if (d == kUnreachable) {
      throw std::invalid_argument("graph is disconnected");
    }
    PairCounts pc;
    pc.distance = static_cast<std::uint8_t>(d);
    for (auto w : g.neighbors(v)) {
      pc.c += static_cast<int>(dist[w] == d - 1);
      pc.b += static_cast<int>(dist[w] == d + 1);
    }
    out[v] = pc;
  }
}

class DrgMerger {
 public:
  void add(Vertex source, Vertex target, const PairCounts& pc) {
    if (pc.distance >= reference_.size()) {
      reference_.resize(pc.distance + 1);
    }
    auto& ref = reference_[pc.distance];
    if (!ref) {
      ref = pc;
      return;
    }
    if (ref->c == pc.c && ref->b == pc.b) {
      return;
    }
    ++report_.violation_count;
    if (report_.violations.size() < 100) {
      report_.violations.push_back({source, target, pc.distance, pc.c, pc.b, ref->c, ref->b});
    }
  }

  DrgReport finish() && {
    const int diameter = static_cast<int>(reference_.size()) - 1;
    report_.diameter = std::max(diameter, 0);
    report_.distance_regular = report_.violation_count == 0;
    if (report_.distance_regular && !reference_.empty()) {
      IntersectionArray arr;
      arr.valency = reference_[0]->b;
      for (int i = 0; i < diameter; ++i) {
        arr.b.push_back(reference_[i]->b);
      }
      for (int i = 1; i <= diameter; ++i) {
        arr.c.push_back(reference_[i]->c);
      }
      report_.array = std::move(arr);
    }
    return std::move(report_);
  }

 private:
  std::vector<std::optional<PairCounts>> reference_;
  DrgReport report_;
};

bool same_class_row(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b, int diameter) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    const bool in_a = a[w] == 0 || a[w] == diameter;
    const bool in_b = b[w] == 0 || b[w] == diameter;
    if (in_a != in_b) {
      return false;
    }
  }
  return true;
}

DistanceMatrix distances_impl(const Graph& g, std::size_t max_vertices, bool parallel) {
  require_vertex_guard(g, max_vertices);
  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> data(n * n, kUnreachable);
  const auto count = static_cast<std::int64_t>(n);
  const int threads = parallel ? thread_count() : 1;
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::int64_t u = 0; u < count; ++u) {
    const auto row = bfs_distances(g, static_cast<Vertex>(u));
    std::copy(row.begin(), row.end(), data.begin() + u * count);
  }
  return DistanceMatrix(n, std::move(data));
}

}  // namespace

Graph Graph::from_edges(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges,
                        std::vector<std::uint64_t> labels) {
  if (!labels.empty() && labels.size() != vertex_count) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  std::vector<std::vector<Vertex>> adj(vertex_count);
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) {
      throw std::invalid_argument("loop at vertex " + std::to_string(u));
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Graph g;
  g.offsets_.reserve(vertex_count + 1);
  g.offsets_.push_back(0);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw std::invalid_argument("repeated edge at vertex " + std::to_string(v));
    }
    g.targets_.insert(g.targets_.end(), list.begin(), list.end());
    g.offsets_.push_back(g.targets_.size());
  }
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (auto v : neighbors(u)) {
      if (u < v) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

Graph Graph::with_labels(std::vector<std::uint64_t> labels) const {
  if (labels.size() != vertex_count()) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u + 1 < n; ++u) {
    edges.emplace_back(u, u + 1);
  }
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    edges.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  }
  return Graph::from_edges(n, edges);
}

CosetGraph build_coset_graph(const LinearCode& code, const CosetTable& table,
                             std::size_t max_redundancy) {
  if (table.redundancy() > max_redundancy) {
    throw GuardExceeded("coset graph (n-k)", table.redundancy(), max_redundancy);
  }
  CosetGraph out;
  std::vector<Syndrome> connection;
  std::unordered_set<Syndrome> seen;
  bool loop = false;
  bool repeated = false;
  for (auto h : code.column_syndromes()) {
    if (h == 0) {
      loop = true;
    } else if (!seen.insert(h).second) {
      repeated = true;
    } else {
      connection.push_back(h);
    }
  }
  if (loop) {
    out.warnings.emplace_back("zero column in H: loops dropped (d = 1)");
  }
  if (repeated) {
    out.warnings.emplace_back("repeated columns in H: multiple edges collapsed (d = 2)");
  }
  const std::size_t n = table.size();
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(n * connection.size() / 2);
  for (Syndrome s = 0; s < n; ++s) {
    for (auto h : connection) {
      const Syndrome t = s ^ h;
      if (s < t) {
        edges.emplace_back(s, t);
      }
    }
  }
  std::vector<std::uint64_t> labels(n);
  for (std::size_t s = 0; s < n; ++s) {
    labels[s] = s;
  }
  out.graph = Graph::from_edges(n, edges, std::move(labels));
  return out;
}

std::vector<std::uint64_t> raw_syndrome_labels(const CosetTable& table, const BitMatrix& h_raw) {
  if (h_raw.rows() > 64 || h_raw.cols() != table.length()) {
    throw std::invalid_argument("raw parity check must have <= 64 rows and n columns");
  }
  std::vector<std::uint64_t> raw_columns(h_raw.cols(), 0);
  for (std::size_t i = 0; i < h_raw.rows(); ++i) {
    for (auto j : h_raw.row(i).support()) {
      raw_columns[j] |= std::uint64_t{1} << i;
    }
  }
  std::vector<std::uint64_t> labels(table.size());
  for (std::size_t s = 0; s < table.size(); ++s) {
    std::uint64_t raw = 0;
    for (auto j : table.leader_support(static_cast<Syndrome>(s))) {
      raw ^= raw_columns[j];
    }
    labels[s] = raw;
  }
  return labels;
}

bool DistanceMatrix::connected() const {
  return std::none_of(data_.begin(), data_.end(), [](std::uint8_t d) { return d == kUnreachable; });
}

int DistanceMatrix::diameter() const {
  int best = 0;
  for (auto d : data_) {
    if (d != kUnreachable) {
      best = std::max<int>(best, d);
    }
  }
  return best;
}

std::vector<std::uint8_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::uint8_t> dist(g.vertex_count(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (auto v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        if (dist[u] + 1 >= kUnreachable) {
          throw GuardExceeded("graph distance", dist[u] + 1U, kUnreachable - 1U);
        }
        dist[v] = static_cast<std::uint8_t>(dist[u] + 1);
        queue.push_back(v);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g, std::size_t max_vertices) {
  return distances_impl(g, max_vertices, true);
}

DrgReport distance_regular_check(const Graph& g, std::size_t max_vertices) {
  require_vertex_guard(g, max_vertices);
  const std::size_t n = g.vertex_count();
  const int threads = thread_count();
  // Sources are processed in blocks so the merge can run in source order.
  const std::size_t block = std::max<std::size_t>(1, static_cast<std::size_t>(threads) * 8);
  std::vector<PairCounts> counts(block * n);
  DrgMerger merger;
  for (std::size_t start = 0; start < n; start += block) {
    const std::size_t len = std::min(block, n - start);
    const auto len_i = static_cast<std::int64_t>(len);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t k = 0; k < len_i; ++k) {
      try {
        source_counts(g, static_cast<Vertex>(start + k),
                      std::span<PairCounts>(counts.data() + k * n, n));
      } catch (...) {
#pragma omp critical
        failure = std::current_exception();
      }
    }
    if (failure) {
      std::rethrow_exception(failure);
    }
    for (std::size_t k = 0; k < len; ++k) {
      for (Vertex v = 0; v < n; ++v) {
        merger.add(static_cast<Vertex>(start + k), v, counts[k * n + v]);
      }
    }
  }
  return std::move(merger).finish();
}

namespace serial {

DrgReport distance_regular_check(const Graph& g, std::size_t max_vertices) {
  require_vertex_guard(g, max_vertices);
  const std::size_t n = g.vertex_count();
  std::vector<PairCounts> counts(n);
  DrgMerger merger;
  for (Vertex u = 0; u < n; ++u) {
    source_counts(g, u, counts);
    for (Vertex v = 0; v < n; ++v) {
      merger.add(u, v, counts[v]);
    }
  }
  return std::move(merger).finish();
}

DistanceMatrix all_pairs_distances(const Graph& g, std::size_t max_vertices) {
  return distances_impl(g, max_vertices, false);
}

}  // namespace serial

std::vector<Permutation> coset_graph_automorphisms(const CosetTable& table,
                                                   std::span<const Permutation> coordinate_perms) {
  std::vector<Permutation> out;
  const std::size_t n = table.size();
  for (std::size_t i = 0; i < table.redundancy(); ++i) {
    std::vector<std::uint32_t> image(n);
    for (std::size_t s = 0; s < n; ++s) {
      image[s] = static_cast<std::uint32_t>(s ^ (std::size_t{1} << i));
    }
    out.emplace_back(std::move(image));
  }
  const CosetAction action(table);
  for (const auto& tau : coordinate_perms) {
    std::vector<std::uint32_t> image(n);
    for (std::size_t s = 0; s < n; ++s) {
      image[s] = action.apply(tau, static_cast<Syndrome>(s));
    }
    out.emplace_back(std::move(image));
  }
  return out;
}

void require_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.vertex_count()) {
    throw std::invalid_argument("vertex permutation degree does not match the graph");
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (auto v : g.neighbors(u)) {
      if (!g.has_edge(p(u), p(v))) {
        throw std::invalid_argument("generator is not a graph automorphism: edge " +
                                    std::to_string(u) + "-" + std::to_string(v) + " not preserved");
      }
    }
  }
}

DtReport distance_transitive_check(const Graph& g, std::span<const Permutation> generators,
                                   std::size_t max_vertices) {
  require_vertex_guard(g, max_vertices);
  for (const auto& p : generators) {
    require_automorphism(g, p);
  }
  const auto dist = all_pairs_distances(g, max_vertices);
  if (!dist.connected()) {
    throw std::invalid_argument("graph is disconnected");
  }
  const std::size_t n = g.vertex_count();
  UnionFind pairs(n * n);
  for (const auto& p : generators) {
    for (Vertex u = 0; u < n; ++u) {
      const std::size_t pu = p(u);
      for (Vertex v = 0; v < n; ++v) {
        pairs.unite(static_cast<std::uint32_t>(u * n + v), static_cast<std::uint32_t>(pu * n + p(v)));
      }
    }
  }
  DtReport report;
  const int diameter = dist.diameter();
  report.orbits_per_distance.assign(static_cast<std::size_t>(diameter) + 1, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const auto idx = static_cast<std::uint32_t>(u * n + v);
      if (pairs.find(idx) == idx) {
        ++report.orbits_per_distance[dist.at(u, v)];
      }
    }
  }
  report.distance_transitive =
      std::all_of(report.orbits_per_distance.begin(), report.orbits_per_distance.end(),
                  [](std::size_t c) { return c == 1; });
  return report;
}

PrimitivityReport primitivity_check(const Graph& g, std::size_t max_vertices) {
  return primitivity_check(all_pairs_distances(g, max_vertices));
}

PrimitivityReport primitivity_check(const DistanceMatrix& dist) {
  PrimitivityReport report;
  if (!dist.connected()) {
    return report;
  }
  const std::size_t n = dist.vertex_count();
  const int diameter = dist.diameter();
  for (int i = 1; i <= diameter; ++i) {
    // The distance-i graph lives only inside this union-find.
    UnionFind sets(n);
    for (Vertex u = 0; u < n; ++u) {
      const auto row = dist.row(u);
      for (Vertex v = u + 1; v < n; ++v) {
        if (row[v] == i) {
          sets.unite(u, v);
        }
      }
    }
    report.connected.push_back(sets.components() == 1);
  }
  report.primitive = std::all_of(report.connected.begin(), report.connected.end(),
                                 [](bool c) { return c; });
  return report;
}

AntipodalityReport antipodality_check(const Graph& g, std::size_t max_vertices) {
  return antipodality_check(all_pairs_distances(g, max_vertices));
}

AntipodalityReport antipodality_check(const DistanceMatrix& dist) {
  AntipodalityReport report;
  const std::size_t n = dist.vertex_count();
  if (!dist.connected()) {
    return report;
  }
  const int diameter = dist.diameter();
  report.diameter = diameter;
  std::vector<bool> placed(n, false);
  for (Vertex u = 0; u < n; ++u) {
    if (placed[u]) {
      continue;
    }
    std::vector<Vertex> cls;
    const auto row = dist.row(u);
    for (Vertex v = 0; v < n; ++v) {
      if (row[v] == 0 || row[v] == diameter) {
        cls.push_back(v);
      }
    }
    for (auto v : cls) {
      if (placed[v] || !same_class_row(row, dist.row(v), diameter)) {
        report.classes.clear();
        return report;
      }
      placed[v] = true;
    }
    report.classes.push_back(std::move(cls));
  }
  report.antipodal = true;
  const std::size_t first = report.classes.front().size();
  const bool uniform = std::all_of(report.classes.begin(), report.classes.end(),
                                   [&](const auto& c) { return c.size() == first; });
  report.class_size = uniform ? first : 0;
  return report;
}

Graph fold(const Graph& g, std::size_t max_vertices) {
  const auto antipodal = antipodality_check(g, max_vertices);
  if (!antipodal.antipodal) {
    throw std::invalid_argument("cannot fold: graph is not antipodal");
  }
  std::vector<Vertex> class_of(g.vertex_count());
  std::vector<std::uint64_t> labels;
  for (std::size_t k = 0; k < antipodal.classes.size(); ++k) {
    const auto& cls = antipodal.classes[k];
    if (cls.size() > 2) {
      throw std::invalid_argument("cannot fold: antipodal class of size " + std::to_string(cls.size()));
    }
    for (auto v : cls) {
      class_of[v] = static_cast<Vertex>(k);
    }
    labels.push_back(g.label(cls.front()));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& [u, v] : g.edges()) {
    auto a = class_of[u];
    auto b = class_of[v];
    if (a == b) {
      continue;
    }
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(antipodal.classes.size(), edges, std::move(labels));
}

bool is_isomorphism(const Graph& a, const Graph& b, std::span<const Vertex> map) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || map.size() != n || a.edge_count() != b.edge_count()) {
    return false;
  }
  std::vector<bool> hit(n, false);
  for (auto v : map) {
    if (v >= n || hit[v]) {
      return false;
    }
    hit[v] = true;
  }
  for (const auto& [u, v] : a.edges()) {
    if (!b.has_edge(map[u], map[v])) {
      return false;
    }
  }
  return true;
}

bool fold_matches_union_graph(const CosetTable& base_table, const Graph& folded,
                              const LinearCode& union_code, const Graph& union_graph) {
  std::vector<Vertex> map(folded.vertex_count());
  for (Vertex f = 0; f < folded.vertex_count(); ++f) {
    const auto s = static_cast<Syndrome>(folded.label(f));
    const Syndrome t = union_code.syndrome_word(base_table.leader(s));
    if (t >= union_graph.vertex_count() || union_graph.label(t) != t) {
      return false;
    }
    map[f] = t;
  }
  return is_isomorphism(folded, union_graph, map);
}

bool halved_cube_isomorphism_check(std::size_t m, const Graph& g) {
  if (m < 2 || m > 63 || !g.has_labels()) {
    return false;
  }
  const std::size_t n = g.vertex_count();
  if (n != (std::size_t{1} << (m - 1))) {
    return false;
  }
  const auto labels = g.labels();
  std::unordered_set<std::uint64_t> distinct;
  for (auto l : labels) {
    if ((l >> m) != 0 || (std::popcount(l) & 1) != 0 || !distinct.insert(l).second) {
      return false;
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool adjacent = std::popcount(labels[u] ^ labels[v]) == 2;
      if (adjacent != g.has_edge(u, v)) {
        return false;
      }
    }
  }
  return true;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
}

void write_dot(std::ostream& out, const Graph& g, std::size_t label_bits) {
  out << "graph coset_graph {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::string bits(label_bits, '0');
    const auto l = g.label(v);
    for (std::size_t i = 0; i < label_bits && i < 64; ++i) {
      if ((l >> i) & 1U) {
        bits[i] = '1';
      }
    }
    out << "  " << v << " [label=\"" << bits << "\"];\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << "  " << u << " -- " << v << ";\n";
  }
  out << "}\n";
}

}  // namespace crclab
