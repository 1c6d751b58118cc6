#include "subcount/gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace subcount {

Graph gen_clique(std::size_t k) {
  if (k < 1) throw ParameterError("gen_clique: k >= 1 required");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) edges.push_back({u, v});
  return Graph::from_edges(k, std::move(edges));
}

Graph gen_star(std::size_t n) {
  if (n < 2) throw ParameterError("gen_star: n >= 2 required");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph::from_edges(n, std::move(edges));
}

Graph gen_er(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw ParameterError("gen_er: p in [0,1] required");
  std::vector<Edge> edges;
  Rng rng(seed);
  if (p > 0.0) {
    // Skip-based enumeration over the C(n,2) pair indices.
    const double logq = std::log1p(-p);
    std::uint64_t total = n * (n - 1) / 2;
    std::uint64_t idx = 0;
    bool done = (p >= 1.0);
    if (done) {
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    while (!done) {
      double r = rng.uniform_real();
      double skip = std::floor(std::log1p(-r) / logq);
      if (skip >= static_cast<double>(total - idx)) break;
      idx += static_cast<std::uint64_t>(skip);
      // invert pair index -> (u, v)
      std::uint64_t u = 0, rem = idx;
      while (rem >= n - 1 - u) {
        rem -= n - 1 - u;
        ++u;
      }
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(u + 1 + rem)});
      ++idx;
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

namespace {

// Uniform random labelled tree via Pruefer decode.
void append_random_tree(std::size_t n, Rng& rng, std::vector<Edge>& out) {
  if (n == 2) {
    out.push_back({0, 1});
    return;
  }
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.uniform_below(n));
  std::vector<std::uint32_t> deg(n, 1);
  for (Vertex c : code) ++deg[c];
  std::uint64_t ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  std::uint64_t leaf = ptr;
  for (Vertex c : code) {
    out.push_back(make_edge(static_cast<Vertex>(leaf), c));
    if (--deg[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      while (deg[++ptr] != 1) {}
      leaf = ptr;
    }
  }
  out.push_back(make_edge(static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1)));
}

}  // namespace

Graph gen_forest_union(std::size_t n, std::uint64_t alpha, std::uint64_t seed) {
  if (alpha < 1 || n < 2)
    throw ParameterError("gen_forest_union: alpha >= 1, n >= 2 required");
  std::vector<Edge> edges;
  Rng rng(seed);
  for (std::uint64_t j = 0; j < alpha; ++j) {
    Rng tree_rng = rng.split(j);
    append_random_tree(n, tree_rng, edges);
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph gen_planted_clique(const Graph& base, std::size_t k, std::uint64_t seed) {
  const std::size_t n = base.num_vertices();
  if (k < 2 || k > n)
    throw ParameterError("gen_planted_clique: 2 <= k <= n required");
  Rng rng(seed);
  // Partial Fisher-Yates over vertex ids.
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  for (std::size_t i = 0; i < k; ++i)
    std::swap(ids[i], ids[i + rng.uniform_below(n - i)]);
  std::vector<Edge> edges = base.edges();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      edges.push_back(make_edge(ids[i], ids[j]));
  return Graph::from_edges(n, std::move(edges));
}

namespace {

// Bipartite gadget with exactly `want` edges, maximum degree <= dmax, on
// 2*half vertices offset by `off`. Circulant fill, near-regular.
void append_bipartite(std::size_t half, std::uint64_t want, std::uint64_t dmax,
                      Vertex off, std::vector<Edge>& out) {
  std::uint64_t added = 0;
  for (std::uint64_t s = 0; s < dmax && added < want; ++s)
    for (std::size_t i = 0; i < half && added < want; ++i, ++added)
      out.push_back({static_cast<Vertex>(off + i),
                     static_cast<Vertex>(off + half + (i + s) % half)});
  if (added < want)
    throw ParameterError("bipartite gadget infeasible: need more slots");
}

}  // namespace

LowerBoundFamily gen_lower_bound_family(LowerBoundKind kind, std::size_t n,
                                        std::uint64_t alpha, std::uint64_t t,
                                        std::uint64_t /*seed*/) {
  if (alpha < 1 || t < 1)
    throw ParameterError("gen_lower_bound_family: alpha, t >= 1 required");
  const auto c = static_cast<std::size_t>(std::ceil(std::cbrt(double(t))));
  if (alpha >= c)
    throw ParameterError(
        "gen_lower_bound_family: advice must satisfy alpha < ceil(t^{1/3})");
  if (n % 2 != 0)
    throw ParameterError("gen_lower_bound_family: n must be even");
  if (n / 2 < alpha)
    throw ParameterError(
        "gen_lower_bound_family: n/2 >= alpha needed for the regular part");
  const std::uint64_t gadget_edges = std::uint64_t(c) * (c - 1) / 2;
  // Smallest even vertex count that fits `gadget_edges` edges at max degree
  // alpha, and is large enough to host the kind-Two clique.
  std::size_t half = std::max<std::size_t>(
      {(gadget_edges + alpha - 1) / alpha, alpha, (c + 1) / 2});
  const std::size_t r2 = 2 * half;

  std::vector<Edge> edges;
  append_bipartite(n / 2, std::uint64_t(alpha) * (n / 2), alpha, 0, edges);

  LowerBoundFamily fam;
  if (kind == LowerBoundKind::One) {
    append_bipartite(half, gadget_edges, alpha, static_cast<Vertex>(n), edges);
    fam.t_total = 0;
  } else {
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = i + 1; j < c; ++j)
        edges.push_back({static_cast<Vertex>(n + i), static_cast<Vertex>(n + j)});
    fam.t_total = std::uint64_t(c) * (c - 1) * (c - 2) / 6;
  }
  fam.clique_size = c;
  fam.gadget_vertices = r2;
  fam.n_total = n + r2;
  fam.m_total = edges.size();
  fam.graph = Graph::from_edges(fam.n_total, std::move(edges));
  if (fam.graph.num_edges() != fam.m_total)
    throw ParameterError("gen_lower_bound_family: duplicate edges in gadget");
  return fam;
}

}  // namespace subcount
