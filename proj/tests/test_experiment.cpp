#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "subcount/experiment.hpp"
#include "subcount/gen.hpp"

using namespace subcount;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("graph spec parsing") {
  CHECK(make_graph("clique:k=6").graph.num_edges() == 15);
  CHECK(make_graph("clique:k=6").exact_triangles == 20);
  CHECK(make_graph("star:n=9").graph.num_edges() == 8);
  CHECK(make_graph("er:n=50,p=0.2,seed=3").graph.num_vertices() == 50);
  CHECK(make_graph("forest-union:n=100,alpha=1,seed=1").exact_triangles == 0);
  const auto planted = make_graph("planted:n=100,alpha=2,k=10,seed=1");
  CHECK(planted.exact_triangles >= 120);  // C(10,3)
  CHECK(make_graph("lb1:n=64,alpha=2,t=1000,seed=0").exact_triangles == 0);
  CHECK(make_graph("lb2:n=64,alpha=2,t=1000,seed=0").exact_triangles == 120);
  CHECK_THROWS_AS(make_graph("wat:k=1"), ParameterError);
  CHECK_THROWS_AS(make_graph("clique:"), ParameterError);
  CHECK_THROWS_AS(make_graph("clique:n=6"), ParameterError);
}

TEST_CASE("algo names") {
  CHECK(parse_algo("triangles-testable") == Algo::TrianglesTestable);
  CHECK(parse_algo("edges-adaptive") == Algo::EdgesAdaptive);
  CHECK(parse_algo("single-guess") == Algo::SingleGuess);
  CHECK_THROWS_AS(parse_algo("nope"), ParameterError);
}

TEST_CASE("csv schema, exactness and replica seeding") {
  ExperimentConfig cfg;
  cfg.graph_spec = "clique:k=20";
  cfg.algo = Algo::SingleGuessEdges;
  cfg.eps = 0.42;
  cfg.delta = 0.1;
  cfg.advice = 19;
  cfg.guess = 190.0;
  cfg.replicas = 16;
  cfg.base_seed = 100;
  const std::string csv = run_experiment(cfg);
  const auto rows = lines(csv);
  REQUIRE(rows.size() == 17);
  CHECK(rows[0] ==
        "seed,graph_id,exact,kind,estimate,rel_err,q_degree,q_neighbor,"
        "q_pair,q_edge,q_vertex,ms");
  // exact-branch edge count: estimate 190, rel_err 0, seeds 100..115
  CHECK(rows[1].find("100,clique:k=20,190,estimate,190,0,") == 0);
  CHECK(rows[16].find("115,") == 0);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].back() == '0');  // ms column zero without --timing
}

TEST_CASE("identical output regardless of worker count") {
  ExperimentConfig cfg;
  cfg.graph_spec = "clique:k=8";
  cfg.algo = Algo::SingleGuess;
  cfg.eps = 0.05;
  cfg.delta = 0.4;
  cfg.advice = 7;
  cfg.guess = 1e6;
  cfg.replicas = 12;
  cfg.base_seed = 7;
  const std::string a = run_experiment(cfg);
  setenv("SC_THREADS", "1", 1);
  const std::string b = run_experiment(cfg);
  setenv("SC_THREADS", "3", 1);
  const std::string c = run_experiment(cfg);
  unsetenv("SC_THREADS");
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.find(",56,estimate,") != std::string::npos);
}

TEST_CASE("bad advice rows carry no estimate") {
  ExperimentConfig cfg;
  cfg.graph_spec = "clique:k=30";
  cfg.algo = Algo::SingleGuess;
  cfg.eps = 0.05;
  cfg.delta = 0.5;
  cfg.advice = 1;  // degree-sum gate fires
  cfg.guess = 1e6;
  cfg.replicas = 3;
  cfg.base_seed = 1;
  const auto rows = lines(run_experiment(cfg));
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].find(",bad-advice,,,") != std::string::npos);
}

TEST_CASE("config validation") {
  ExperimentConfig cfg;
  cfg.graph_spec = "clique:k=5";
  cfg.algo = Algo::SingleGuess;
  cfg.replicas = 0;
  CHECK_THROWS_AS(run_experiment(cfg), ParameterError);
  cfg.replicas = 1;
  cfg.eps = 1.5;
  CHECK_THROWS_AS(run_experiment(cfg), ParameterError);
  cfg.eps = 0.1;
  cfg.guess.reset();  // single-guess without a guess
  CHECK_THROWS_AS(run_experiment(cfg), ParameterError);
}

TEST_CASE("lower-bound specs agree on shape through the parser") {
  const auto a = make_graph("lb1:n=128,alpha=4,t=5000,seed=2");
  const auto b = make_graph("lb2:n=128,alpha=4,t=5000,seed=2");
  CHECK(a.graph.num_vertices() == b.graph.num_vertices());
  CHECK(a.graph.num_edges() == b.graph.num_edges());
  CHECK(a.exact_triangles == 0);
  CHECK(b.exact_triangles > 0);
}
