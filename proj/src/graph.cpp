#include "subcount/graph.hpp"

#include <algorithm>
#include <numeric>

namespace subcount {

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("self-loop in edge list");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= n) throw std::invalid_argument("vertex id out of range");
  }
  std::sort(edges.begin(), edges.end(), edge_less);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.offsets_.assign(n + 1, 0);
  for (const auto& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adj_.resize(2 * g.edges_.size());
  g.adj_edge_.resize(2 * g.edges_.size());
  std::vector<std::uint64_t> pos(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::uint32_t i = 0; i < g.edges_.size(); ++i) {
    const auto& e = g.edges_[i];
    g.adj_[pos[e.u]] = e.v;
    g.adj_edge_[pos[e.u]++] = i;
    g.adj_[pos[e.v]] = e.u;
    g.adj_edge_[pos[e.v]++] = i;
  }
  // Edge list is sorted lexicographically, so each adjacency run is already
  // ascending for the .v side; the .u side needs a per-vertex sort.
  for (Vertex v = 0; v < n; ++v) {
    auto b = g.offsets_[v], e = g.offsets_[v + 1];
    std::vector<std::pair<Vertex, std::uint32_t>> tmp;
    tmp.reserve(e - b);
    for (auto i = b; i < e; ++i) tmp.emplace_back(g.adj_[i], g.adj_edge_[i]);
    std::sort(tmp.begin(), tmp.end());
    for (auto i = b; i < e; ++i) {
      g.adj_[i] = tmp[i - b].first;
      g.adj_edge_[i] = tmp[i - b].second;
    }
  }
  return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a == b) return false;
  // Search the shorter list.
  if (degree(a) > degree(b)) std::swap(a, b);
  auto ns = neighbors(a);
  return std::binary_search(ns.begin(), ns.end(), b);
}

std::optional<std::uint32_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto ns = neighbors(a);
  auto it = std::lower_bound(ns.begin(), ns.end(), b);
  if (it == ns.end() || *it != b) return std::nullopt;
  return adj_edge_[offsets_[a] + (it - ns.begin())];
}

void Graph::validate() const {
  std::uint64_t degsum = 0;
  for (Vertex v = 0; v < n_; ++v) {
    auto ns = neighbors(v);
    degsum += ns.size();
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (ns[i] == v) throw InvariantViolation("self-loop");
      if (i > 0 && ns[i] <= ns[i - 1])
        throw InvariantViolation("neighbor list not strictly ascending");
      if (!has_edge(ns[i], v)) throw InvariantViolation("asymmetric adjacency");
    }
  }
  if (degsum != 2 * num_edges())
    throw InvariantViolation("handshake identity failed");
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (!edge_less(edges_[i - 1], edges_[i]))
      throw InvariantViolation("edge list not sorted/deduplicated");
  for (const auto& e : edges_)
    if (e.u >= e.v || e.v >= n_) throw InvariantViolation("non-canonical edge");
}

EdgeDegree edge_degree(const Graph& g, const Edge& e) {
  if (!g.has_edge(e.u, e.v))
    throw std::invalid_argument("edge_degree: edge not in graph");
  const auto du = g.degree(e.u), dv = g.degree(e.v);
  if (du < dv || (du == dv && e.u < e.v)) return {du, e.u};
  return {dv, e.v};
}

std::uint64_t oriented_out_degree(const Graph& g, Vertex v) {
  std::uint64_t out = 0;
  for (Vertex w : g.neighbors(v))
    if (vertex_precedes(g, v, w)) ++out;
  return out;
}

std::uint64_t degeneracy(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return 0;
  std::vector<std::uint64_t> deg(n);
  std::uint64_t maxdeg = 0;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    maxdeg = std::max(maxdeg, deg[v]);
  }
  // Bucket queue peeling.
  std::vector<std::vector<Vertex>> buckets(maxdeg + 1);
  for (Vertex v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
  std::vector<bool> removed(n, false);
  std::uint64_t core = 0, cur = 0;
  for (std::size_t peeled = 0; peeled < n; ++peeled) {
    while (cur <= maxdeg && buckets[cur].empty()) ++cur;
    // A vertex may sit in a stale bucket; skip until a live entry matches.
    while (true) {
      Vertex v = buckets[cur].back();
      buckets[cur].pop_back();
      if (!removed[v] && deg[v] == cur) {
        removed[v] = true;
        core = std::max(core, cur);
        for (Vertex w : g.neighbors(v)) {
          if (!removed[w] && deg[w] > cur) {
            --deg[w];
            buckets[deg[w]].push_back(w);
            if (deg[w] < cur) cur = deg[w];
          }
        }
        break;
      }
      while (cur <= maxdeg && buckets[cur].empty()) ++cur;
    }
  }
  return core;
}

TriangleCounts count_triangles(const Graph& g) {
  const std::size_t n = g.num_vertices();
  TriangleCounts out;
  out.per_edge.assign(g.num_edges(), 0);

  // rank by (degree, id); orient edges toward higher rank
  std::vector<std::uint64_t> rank(n);
  {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return vertex_precedes(g, a, b);
    });
    for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;
  }
  // out-neighbors in orientation, sorted by id for 2-pointer intersection
  std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> fwd(n);
  for (std::uint32_t i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edges()[i];
    if (rank[e.u] < rank[e.v])
      fwd[e.u].emplace_back(e.v, i);
    else
      fwd[e.v].emplace_back(e.u, i);
  }
  for (auto& f : fwd) std::sort(f.begin(), f.end());

  for (Vertex u = 0; u < n; ++u) {
    for (const auto& [v, euv] : fwd[u]) {
      const auto& a = fwd[u];
      const auto& b = fwd[v];
      std::size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
          ++i;
        } else if (a[i].first > b[j].first) {
          ++j;
        } else {
          ++out.total;
          ++out.per_edge[euv];
          ++out.per_edge[a[i].second];
          ++out.per_edge[b[j].second];
          ++i;
          ++j;
        }
      }
    }
  }
  return out;
}

std::uint64_t count_triangles_brute(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::uint64_t t = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      for (Vertex w = v + 1; w < n; ++w)
        if (g.has_edge(u, w) && g.has_edge(v, w)) ++t;
    }
  return t;
}

}  // namespace subcount
