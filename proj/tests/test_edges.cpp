#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "subcount/edges.hpp"
#include "subcount/gen.hpp"

using namespace subcount;

namespace {

EdgeEstimateOutcome run(const Graph& g, double m_guess, double eps,
                        double delta, std::uint64_t alpha, std::uint64_t seed) {
  EdgeRunConfig cfg;
  cfg.m_guess = m_guess;
  cfg.eps = eps;
  cfg.delta = delta;
  cfg.alpha_advice = alpha;
  cfg.n = g.num_vertices();
  OracleHandle h(g, seed);
  return approx_edges_with_advice(h, cfg);
}

}  // namespace

TEST_CASE("exact branch returns m when the loop would touch every vertex") {
  Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
  const auto r = run(path, 2.0, 0.5, 0.2, 1, 1);
  CHECK(!r.bad_advice);
  CHECK(r.stats.exact_branch);
  CHECK(r.value == 2.0);

  Graph star = gen_star(50);
  const auto rs = run(star, 49.0, 0.5, 0.2, 1, 2);
  CHECK(rs.stats.exact_branch);
  CHECK(rs.value == 49.0);
}

TEST_CASE("sampling loop concentrates near m on a large tree") {
  Graph tree = gen_forest_union(600000, 1, 3);
  const double m = static_cast<double>(tree.num_edges());
  const auto r = run(tree, m, 0.42, 0.1, 1, 4);
  CHECK(!r.bad_advice);
  CHECK(!r.stats.exact_branch);
  CHECK(r.stats.q < tree.num_vertices());
  CHECK(std::abs(r.value - m) / m < 0.1);  // far inside the (1+-10eps') band
}

TEST_CASE("estimator range bound") {
  Graph tree = gen_forest_union(600000, 1, 5);
  const auto r = run(tree, tree.num_edges() / 2.0, 0.42, 0.1, 1, 6);
  const double cap = 2.0 * 600000.0 * 1.0 / (0.42 / 6.0);
  CHECK(r.value <= cap);
}

TEST_CASE("clique with unit advice trips the gate") {
  Graph k = gen_clique(60);
  int rejected = 0;
  for (int i = 0; i < 30; ++i)
    if (run(k, 1770.0, 0.3, 0.1, 1, 100 + i).bad_advice) ++rejected;
  CHECK(rejected == 30);  // every edge degree exceeds 2*advice/eps'
}

TEST_CASE("gate almost never fires with honest advice") {
  Graph tree = gen_forest_union(600000, 1, 7);
  int rejected = 0;
  for (int i = 0; i < 20; ++i)
    if (run(tree, double(tree.num_edges()), 0.42, 0.1, 1, 200 + i).bad_advice)
      ++rejected;
  CHECK(rejected == 0);
}

TEST_CASE("parameter validation") {
  Graph g = gen_clique(4);
  EdgeRunConfig cfg;
  cfg.m_guess = 6;
  cfg.eps = 0.3;
  cfg.delta = 0.1;
  cfg.alpha_advice = 1;
  cfg.n = 4;
  OracleHandle h(g, 1);
  auto bad = cfg;
  bad.eps = 0;
  CHECK_THROWS_AS(approx_edges_with_advice(h, bad), std::invalid_argument);
  bad = cfg;
  bad.m_guess = 0;
  CHECK_THROWS_AS(approx_edges_with_advice(h, bad), std::invalid_argument);
  bad = cfg;
  bad.alpha_advice = 0;
  CHECK_THROWS_AS(approx_edges_with_advice(h, bad), std::invalid_argument);
}
