#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace subcount {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;  // canonical: u < v
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("self-loop");
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Lexicographic order on canonical pairs; the fixed "predefined order" used
// for triangle assignment.
inline bool edge_less(const Edge& a, const Edge& b) {
  return a.u != b.u ? a.u < b.u : a.v < b.v;
}

struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Immutable undirected simple graph. Neighbor lists are sorted ascending by
// vertex id, giving the model's fixed-but-arbitrary adjacency ordering.
class Graph {
 public:
  // Canonicalizes, sorts and deduplicates; throws on self-loops or ids >= n.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  std::uint64_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  // i is 0-based here; the oracle layer exposes the 1-based query.
  Vertex neighbor(Vertex v, std::uint64_t i) const { return adj_[offsets_[v] + i]; }

  bool has_edge(Vertex a, Vertex b) const;

  // Index into edges() for a canonical pair, if present.
  std::optional<std::uint32_t> edge_index(Vertex a, Vertex b) const;

  const std::vector<Edge>& edges() const { return edges_; }

  // Throws InvariantViolation if simplicity/symmetry/handshake fail.
  void validate() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> offsets_;
  std::vector<Vertex> adj_;
  std::vector<std::uint32_t> adj_edge_;  // edge index parallel to adj_
};

struct EdgeDegree {
  std::uint64_t degree;  // min(d(u), d(v))
  Vertex anchor;         // endpoint attaining the minimum, ties to smaller id
};

// Degree and anchor endpoint of an edge; throws if e is not in G.
EdgeDegree edge_degree(const Graph& g, const Edge& e);

// Total order on vertices: by degree, ties broken by id.
inline bool vertex_precedes(const Graph& g, Vertex a, Vertex b) {
  const auto da = g.degree(a), db = g.degree(b);
  return da != db ? da < db : a < b;
}

// Number of neighbors w of v with v preceding w; sums to m over all v.
std::uint64_t oriented_out_degree(const Graph& g, Vertex v);

// k-core peeling number; sandwiches arboricity within a factor of 2.
std::uint64_t degeneracy(const Graph& g);

struct TriangleCounts {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> per_edge;  // t(e), indexed like Graph::edges()
};

// Degree-ordered enumeration, each triangle listed once.
TriangleCounts count_triangles(const Graph& g);

// Independent O(n^3) cross-check oracle.
std::uint64_t count_triangles_brute(const Graph& g);

}  // namespace subcount
