#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crclab/code.hpp"
#include "crclab/intersection_array.hpp"
#include "crclab/transitivity.hpp"

namespace crclab {

using Vertex = std::uint32_t;

/// Largest redundancy for which the coset graph is materialised.
inline constexpr std::size_t kMaxGraphRedundancy = 20;
/// Largest vertex count for the all-pairs checks (distance matrix, pair
/// orbits, per-vertex BFS sweeps).
inline constexpr std::size_t kMaxPairVertices = std::size_t{1} << 12;

/// Simple undirected graph in compressed adjacency form, neighbour lists
/// sorted. Vertices may carry integer labels.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on loops, repeated edges, or endpoints out
  /// of range. `labels` is either empty or one entry per vertex.
  static Graph from_edges(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges,
                          std::vector<std::uint64_t> labels = {});

  [[nodiscard]] std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  [[nodiscard]] std::size_t edge_count() const { return targets_.size() / 2; }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;
  /// Each edge once, smaller endpoint first, sorted.
  [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> edges() const;

  [[nodiscard]] bool has_labels() const { return !labels_.empty(); }
  [[nodiscard]] std::span<const std::uint64_t> labels() const { return labels_; }
  /// The label, or the vertex index when the graph is unlabelled.
  [[nodiscard]] std::uint64_t label(Vertex v) const { return labels_.empty() ? v : labels_[v]; }
  [[nodiscard]] Graph with_labels(std::vector<std::uint64_t> labels) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<std::uint64_t> labels_;
};

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

struct CosetGraph {
  Graph graph;
  /// Set when d <= 2 made the translation graph collapse loops or multiple
  /// edges.
  std::vector<std::string> warnings;
};

/// Cosets as vertices (vertex index = syndrome = label), s ~ s' iff s + s'
/// is a column of H. Throws GuardExceeded when n-k > max_redundancy.
CosetGraph build_coset_graph(const LinearCode& code, const CosetTable& table,
                             std::size_t max_redundancy = kMaxGraphRedundancy);

/// Labels each coset s with h_raw * leader(s) packed into an integer (bit i
/// is row i); requires h_raw.rows() <= 64.
std::vector<std::uint64_t> raw_syndrome_labels(const CosetTable& table, const BitMatrix& h_raw);

inline constexpr std::uint8_t kUnreachable = 0xFF;

/// Dense table of graph distances.
class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t vertex_count, std::vector<std::uint8_t> data)
      : n_(vertex_count), data_(std::move(data)) {}

  [[nodiscard]] std::size_t vertex_count() const { return n_; }
  [[nodiscard]] int at(Vertex u, Vertex v) const { return data_[static_cast<std::size_t>(u) * n_ + v]; }
  [[nodiscard]] std::span<const std::uint8_t> row(Vertex u) const {
    return {data_.data() + static_cast<std::size_t>(u) * n_, n_};
  }
  [[nodiscard]] bool connected() const;
  /// Largest finite distance.
  [[nodiscard]] int diameter() const;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> data_;
};

/// BFS distances from `source`; unreachable vertices get kUnreachable.
std::vector<std::uint8_t> bfs_distances(const Graph& g, Vertex source);

DistanceMatrix all_pairs_distances(const Graph& g, std::size_t max_vertices = kMaxPairVertices);

struct DrgViolation {
  Vertex source = 0;
  Vertex target = 0;
  int distance = 0;
  int c = 0;
  int b = 0;
  int expected_c = 0;
  int expected_b = 0;
};

struct DrgReport {
  bool distance_regular = false;
  int diameter = 0;
  std::optional<IntersectionArray> array;
  std::size_t violation_count = 0;
  /// First violations in (source, target) order, capped at 100.
  std::vector<DrgViolation> violations;
};

/// BFS from every vertex; for each ordered pair at distance i counts the
/// neighbours of the target at distances i-1 and i+1 from the source. The
/// reference counts for distance i are those of the first such pair in
/// (source, target) order. Throws std::invalid_argument if disconnected.
DrgReport distance_regular_check(const Graph& g, std::size_t max_vertices = kMaxPairVertices);

namespace serial {

DrgReport distance_regular_check(const Graph& g, std::size_t max_vertices = kMaxPairVertices);
DistanceMatrix all_pairs_distances(const Graph& g, std::size_t max_vertices = kMaxPairVertices);

}  // namespace serial

/// Translations by the unit syndromes followed by the coset action of each
/// coordinate permutation; all are automorphisms of the coset graph when
/// the permutations preserve the code.
std::vector<Permutation> coset_graph_automorphisms(const CosetTable& table,
                                                   std::span<const Permutation> coordinate_perms);

/// Throws std::invalid_argument unless p is an automorphism of g.
void require_automorphism(const Graph& g, const Permutation& p);

struct DtReport {
  bool distance_transitive = false;
  /// Entry i is the number of orbits on ordered pairs at distance i.
  std::vector<std::size_t> orbits_per_distance;
};

/// Orbit closure on ordered vertex pairs under the generated group; the
/// graph is distance-transitive iff every distance class (including 0) is a
/// single orbit. Throws std::invalid_argument for a non-automorphism.
DtReport distance_transitive_check(const Graph& g, std::span<const Permutation> generators,
                                   std::size_t max_vertices = kMaxPairVertices);

struct PrimitivityReport {
  /// Entry i-1 tells whether the distance-i graph is connected.
  std::vector<bool> connected;
  bool primitive = false;
};

PrimitivityReport primitivity_check(const Graph& g, std::size_t max_vertices = kMaxPairVertices);
PrimitivityReport primitivity_check(const DistanceMatrix& dist);

struct AntipodalityReport {
  bool antipodal = false;
  int diameter = 0;
  /// Classes of "equal or at maximal distance", ordered by smallest member;
  /// only filled when antipodal.
  std::vector<std::vector<Vertex>> classes;
  /// Common class size, 0 if sizes differ or not antipodal.
  std::size_t class_size = 0;
};

AntipodalityReport antipodality_check(const Graph& g, std::size_t max_vertices = kMaxPairVertices);
AntipodalityReport antipodality_check(const DistanceMatrix& dist);

/// Quotient by the antipodal classes; class k is the class with the k-th
/// smallest minimum and takes that vertex's label. Throws
/// std::invalid_argument unless g is antipodal with classes of size <= 2.
Graph fold(const Graph& g, std::size_t max_vertices = kMaxPairVertices);

/// True when `map` is a bijection V(a) -> V(b) carrying edges exactly onto
/// edges.
bool is_isomorphism(const Graph& a, const Graph& b, std::span<const Vertex> map);

/// Checks the folded coset graph of a non-antipodal code against the coset
/// graph of C u (C + 1): the class of s maps to the union-code syndrome of
/// leader(s). `folded` must carry the original syndromes as labels.
bool fold_matches_union_graph(const CosetTable& base_table, const Graph& folded,
                              const LinearCode& union_code, const Graph& union_graph);

/// True when the labels of g are the 2^(m-1) even-weight vectors of length
/// m and two vertices are adjacent iff their labels are at Hamming
/// distance 2, i.e. the identity map onto the halved m-cube.
bool halved_cube_isomorphism_check(std::size_t m, const Graph& g);

/// "u v" per line, zero-based, smaller endpoint first.
void write_edge_list(std::ostream& out, const Graph& g);
/// DOT with each node labelled by its label as a bit string of the given
/// width (bit 0 first).
void write_dot(std::ostream& out, const Graph& g, std::size_t label_bits);

}  // namespace crclab
