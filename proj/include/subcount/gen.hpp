#pragma once

#include <cstdint>
#include <string>

#include "subcount/graph.hpp"
#include "subcount/rng.hpp"

namespace subcount {

struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Graph gen_clique(std::size_t k);

// G(n, p) with geometric skipping; fine for sparse and dense desk scales.
Graph gen_er(std::size_t n, double p, std::uint64_t seed);

// Union of `alpha` independently seeded uniform random spanning trees on [n]
// (Pruefer decode), duplicate edges dropped. Arboricity <= alpha by
// construction.
Graph gen_forest_union(std::size_t n, std::uint64_t alpha, std::uint64_t seed);

// Adds a k-clique on k distinct random vertices of `base`.
Graph gen_planted_clique(const Graph& base, std::size_t k, std::uint64_t seed);

// Star K_{1,n-1}; center is vertex 0.
Graph gen_star(std::size_t n);

enum class LowerBoundKind { One, Two };

struct LowerBoundFamily {
  Graph graph;
  std::size_t n_total = 0;
  std::size_t m_total = 0;
  std::uint64_t t_total = 0;
  std::size_t clique_size = 0;     // c = ceil(t^{1/3})
  std::size_t gadget_vertices = 0; // vertices in the second component
};

// Two graph families that agree on (n_total, m_total): a bipartite
// (triangle-free) family and a family hiding a clique on c vertices.
// Kind One: alpha-regular bipartite on n vertices plus a max-degree-<=alpha
// bipartite gadget with exactly C(c,2) edges. Kind Two: the same first
// component plus a c-clique and isolated padding.
LowerBoundFamily gen_lower_bound_family(LowerBoundKind kind, std::size_t n,
                                        std::uint64_t alpha, std::uint64_t t,
                                        std::uint64_t seed);

}  // namespace subcount
