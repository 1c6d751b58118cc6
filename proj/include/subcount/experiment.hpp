#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subcount/graph.hpp"

namespace subcount {

enum class Algo {
  TrianglesTestable,
  TrianglesAdaptive,
  EdgesTestable,
  EdgesAdaptive,
  SingleGuess,       // triangle estimator at a fixed t-guess
  SingleGuessEdges,  // edge estimator at a fixed m-guess
};

Algo parse_algo(const std::string& name);

struct ExperimentConfig {
  std::string graph_spec;  // generator spec ("clique:k=6", ...) or "file:<path>"
  Algo algo = Algo::SingleGuess;
  double eps = 0.05;
  double delta = 0.1;
  std::uint64_t advice = 0;  // 0 = use degeneracy(G)
  std::optional<double> guess;
  std::uint64_t replicas = 1;
  std::uint64_t base_seed = 1;
  std::optional<std::uint64_t> budget;
  bool timing = false;  // wall-clock ms column; off keeps output byte-identical
};

struct GraphBundle {
  Graph graph;
  std::string id;
  std::uint64_t exact_triangles = 0;
};

// Parses "clique:k=", "er:n=,p=,seed=", "forest-union:n=,alpha=,seed=",
// "planted:n=,alpha=,k=,seed=", "star:n=", "lb1"/"lb2:n=,alpha=,t=,seed=",
// or "file:<path>".
GraphBundle make_graph(const std::string& spec);

// Runs the replicas (seed = base_seed + replica index) and renders the CSV:
// seed,graph_id,exact,kind,estimate,rel_err,q_degree,q_neighbor,q_pair,q_edge,q_vertex,ms
// Worker count: min(SC_THREADS or hardware, replicas); output is identical
// for any worker count.
std::string run_experiment(const ExperimentConfig& cfg);

struct SweepResult {
  std::string csv;
  double min_ratio = 0;  // measured median queries / theory curve, extremes
  double max_ratio = 0;
};

// Planted-clique family at fixed forest-union base; single-guess triangle
// estimator at the exact t; curve m*alpha/t + m/t^{2/3}.
SweepResult triangle_scaling_sweep(std::size_t base_n, std::uint64_t base_alpha,
                                   const std::vector<std::size_t>& clique_sizes,
                                   double eps, double delta, std::size_t seeds,
                                   std::uint64_t base_seed);

// Forest-union family at fixed n; single-guess edge estimator at the exact m;
// curve n*alpha/m.
SweepResult edge_scaling_sweep(std::size_t n,
                               const std::vector<std::uint64_t>& alphas,
                               double eps, double delta, std::size_t seeds,
                               std::uint64_t base_seed);

}  // namespace subcount
