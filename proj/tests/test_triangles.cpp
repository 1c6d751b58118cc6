#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "subcount/gen.hpp"
#include "subcount/triangles.hpp"

using namespace subcount;

TEST_CASE("threshold formulas") {
  // gamma = max(5, 8000^{1/3}) = 20; tau_d = 8*10000*400/(0.1*8000);
  // tau_t = 12*20/0.1
  const Thresholds th = compute_thresholds(10000, 0.1, 5, 8000);
  CHECK(th.gamma == doctest::Approx(20.0));
  CHECK(th.tau_d == doctest::Approx(40000.0));
  CHECK(th.tau_t == doctest::Approx(2400.0));

  // advice-dominated branch
  const Thresholds th2 = compute_thresholds(100, 0.5, 50, 8);
  CHECK(th2.gamma == doctest::Approx(50.0));
  CHECK(th2.tau_t == doctest::Approx(1200.0));

  CHECK_THROWS(compute_thresholds(0, 0.1, 1, 1));
  CHECK_THROWS(compute_thresholds(10, 1.5, 1, 1));
}

TEST_CASE("is_heavy: degree gate, sampling verdict, memoization") {
  Graph g = gen_clique(12);
  const std::uint64_t m = g.num_edges();
  HeavinessCache cache;

  SUBCASE("degree gate short-circuits") {
    OracleHandle h(g, 1);
    Thresholds th{1, 5.0, 100.0};  // tau_d below every degree
    CHECK(is_heavy(h, g.edges()[0], th, 0.5, m, cache) == Heaviness::Heavy);
    CHECK(h.ledger().neighbor == 0);  // no sampling needed
    CHECK(h.ledger().pair == 0);
  }

  SUBCASE("dense edge flagged by sampling") {
    OracleHandle h(g, 2);
    Thresholds th{1, 1000.0, 2.0};  // t(e)=10 well above tau_t
    CHECK(is_heavy(h, g.edges()[0], th, 0.5, m, cache) == Heaviness::Heavy);
    CHECK(h.ledger().pair > 0);
  }

  SUBCASE("triangle-free edge stays light") {
    Graph star = gen_star(40);
    OracleHandle h(star, 3);
    HeavinessCache c2;
    Thresholds th{1, 1000.0, 2.0};
    CHECK(is_heavy(h, star.edges()[0], th, 0.5, star.num_edges(), c2) ==
          Heaviness::NotHeavy);
  }

  SUBCASE("second lookup is free and stable") {
    OracleHandle h(g, 4);
    Thresholds th{1, 1000.0, 2.0};
    const Heaviness first = is_heavy(h, g.edges()[3], th, 0.5, m, cache);
    const QueryLedger snap = h.ledger();
    CHECK(is_heavy(h, g.edges()[3], th, 0.5, m, cache) == first);
    CHECK(h.ledger() == snap);
    CHECK(cache.size() == 1);
  }
}

TEST_CASE("is_assigned credits the first light edge") {
  Graph k3 = gen_clique(3);
  Thresholds th{1, 1000.0, 1000.0};  // everything light
  OracleHandle h(k3, 5);
  HeavinessCache cache;
  CHECK(is_assigned(h, {0, 1}, 2, th, 0.5, 3, cache));
  CHECK(!is_assigned(h, {0, 2}, 1, th, 0.5, 3, cache));
  CHECK(!is_assigned(h, {1, 2}, 0, th, 0.5, 3, cache));

  // with the first edge forced heavy, credit moves to the next in order
  HeavinessCache forced;
  forced.store({0, 1}, Heaviness::Heavy);
  CHECK(!is_assigned(h, {0, 1}, 2, th, 0.5, 3, forced));
  CHECK(is_assigned(h, {0, 2}, 1, th, 0.5, 3, forced));
  CHECK(!is_assigned(h, {1, 2}, 0, th, 0.5, 3, forced));
}

TEST_CASE("estimator on a triangle-free graph returns zero") {
  Graph f = gen_forest_union(400, 1, 6);  // a tree: no triangles at all
  TriangleRunConfig cfg;
  cfg.t_guess = 1e6;
  cfg.eps = 0.05;
  cfg.delta = 0.3;
  cfg.alpha_advice = 4;
  cfg.m = f.num_edges();
  cfg.keep_going_after_reject = true;
  OracleHandle h(f, 7);
  const EstimateOutcome r = approx_triangles_with_advice(h, cfg);
  CHECK(r.value == 0.0);
  CHECK(r.stats.hits == 0);
  CHECK(r.stats.chi == 0.0);
}

TEST_CASE("estimate identity and ledger bookkeeping") {
  Graph g = gen_clique(8);
  TriangleRunConfig cfg;
  cfg.t_guess = 1e6;
  cfg.eps = 0.05;
  cfg.delta = 0.4;
  cfg.alpha_advice = 7;
  cfg.m = g.num_edges();
  cfg.keep_going_after_reject = true;
  OracleHandle h(g, 8);
  const EstimateOutcome r = approx_triangles_with_advice(h, cfg);
  CHECK(r.value ==
        doctest::Approx(r.stats.d_R * 28.0 / double(r.stats.r) * r.stats.chi));
  CHECK(r.ledger == h.ledger());
  CHECK(r.ledger.uniform_edge == r.stats.r);
  CHECK(!r.bad_advice);  // regular K8, honest gates
}

TEST_CASE("unbiased mean near truth on K8 with overshooting guess") {
  Graph g = gen_clique(8);
  TriangleRunConfig cfg;
  cfg.t_guess = 1e6;
  cfg.eps = 0.05;
  cfg.delta = 0.4;
  cfg.alpha_advice = 7;
  cfg.m = g.num_edges();
  double sum = 0;
  const int runs = 400;
  for (int i = 0; i < runs; ++i) {
    OracleHandle h(g, Rng(9).split(i).seed());
    sum += approx_triangles_with_advice(h, cfg).value;
  }
  // E[t_hat] = 56; SD per run ~51, so +-3*SE ~ 7.7
  CHECK(sum / runs == doctest::Approx(56.0).epsilon(0.2));
}

TEST_CASE("degree-sum gate rejects wildly wrong advice") {
  Graph g = gen_clique(30);
  TriangleRunConfig cfg;
  cfg.t_guess = 1e6;
  cfg.eps = 0.05;
  cfg.delta = 0.5;
  cfg.alpha_advice = 1;  // true degeneracy is 29
  cfg.m = g.num_edges();
  OracleHandle h(g, 10);
  const EstimateOutcome r = approx_triangles_with_advice(h, cfg);
  CHECK(r.bad_advice);
  CHECK(r.reason == RejectReason::DegreeSumReject);
  // early exit: no pair queries spent after the gate
  CHECK(r.ledger.pair == 0);
}

TEST_CASE("eps values above the cap behave like the cap") {
  Graph g = gen_clique(8);
  TriangleRunConfig cfg;
  cfg.t_guess = 1e6;
  cfg.delta = 0.4;
  cfg.alpha_advice = 7;
  cfg.m = g.num_edges();
  cfg.eps = 0.5;
  OracleHandle h1(g, 11);
  const auto a = approx_triangles_with_advice(h1, cfg);
  cfg.eps = 0.05;
  OracleHandle h2(g, 11);
  const auto b = approx_triangles_with_advice(h2, cfg);
  CHECK(a.stats.r == b.stats.r);
  CHECK(a.value == b.value);
}

TEST_CASE("sample-size formula takes the max of its two terms") {
  const Thresholds th = compute_thresholds(1000, 0.05, 2, 500);
  const double lg = std::log(4.0 / 0.2);
  const double r1 = 16.0 * 1000 * th.tau_t * lg / (0.05 * 0.05 * 500);
  const double r2 = 30.0 * 1000 * lg / std::pow(0.05 * 500, 2.0 / 3.0);
  CHECK(triangle_sample_size(1000, 0.05, 0.2, 500, th) ==
        doctest::Approx(std::ceil(std::max(r1, r2))));
}
