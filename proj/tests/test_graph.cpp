#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "subcount/gen.hpp"
#include "subcount/graph.hpp"
#include "subcount/io.hpp"

using namespace subcount;

TEST_CASE("construction canonicalizes and validates") {
  Graph g = Graph::from_edges(4, {{1, 3}, {0, 1}, {1, 2}, {0, 1}});  // dup dropped
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 3);
  CHECK(g.degree(1) == 3);
  CHECK(g.degree(3) == 1);
  CHECK(g.has_edge(3, 1));
  CHECK(!g.has_edge(0, 3));
  g.validate();
  CHECK_THROWS(make_edge(2, 2));
  CHECK_THROWS(Graph::from_edges(2, {{0, 5}}));
}

TEST_CASE("neighbor lists sorted, edge_degree anchors to min") {
  Graph g = gen_star(6);
  auto nb = g.neighbors(0);
  for (std::size_t i = 1; i < nb.size(); ++i) CHECK(nb[i - 1] < nb[i]);
  const auto ed = edge_degree(g, {0, 3});
  CHECK(ed.degree == 1);
  CHECK(ed.anchor == 3);  // leaf side
  CHECK_THROWS(edge_degree(g, {1, 2}));
}

TEST_CASE("vertex order and out-degrees") {
  Graph k3 = gen_clique(3);
  CHECK(oriented_out_degree(k3, 0) == 2);
  CHECK(oriented_out_degree(k3, 1) == 1);
  CHECK(oriented_out_degree(k3, 2) == 0);

  Graph g = gen_er(80, 0.2, 5);
  std::uint64_t sum = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) sum += oriented_out_degree(g, v);
  CHECK(sum == g.num_edges());

  Graph star = gen_star(10);
  CHECK(oriented_out_degree(star, 0) == 0);  // center is order-maximal
}

TEST_CASE("degeneracy on known families") {
  CHECK(degeneracy(gen_clique(7)) == 6);
  CHECK(degeneracy(gen_star(30)) == 1);
  CHECK(degeneracy(gen_forest_union(300, 1, 3)) == 1);
  // union of a forests peels at < 2a
  for (std::uint64_t a : {2ull, 4ull})
    CHECK(degeneracy(gen_forest_union(300, a, 3)) < 2 * a);
}

TEST_CASE("triangle counts match brute force") {
  for (int i = 0; i < 12; ++i) {
    Graph g = gen_er(40 + 5 * i, i % 2 ? 0.3 : 0.1, 200 + i);
    const TriangleCounts tc = count_triangles(g);
    CHECK(tc.total == count_triangles_brute(g));
    std::uint64_t s = 0;
    for (auto t : tc.per_edge) s += t;
    CHECK(s == 3 * tc.total);
  }
  CHECK(count_triangles(gen_clique(8)).total == 56);
  CHECK(count_triangles(gen_forest_union(200, 1, 9)).total == 0);  // a tree
  CHECK(count_triangles(gen_star(50)).total == 0);
}

TEST_CASE("generators hit their size contracts") {
  CHECK(gen_clique(10).num_edges() == 45);
  CHECK(gen_star(12).num_edges() == 11);
  CHECK(gen_er(30, 0.0, 1).num_edges() == 0);
  CHECK(gen_er(30, 1.0, 1).num_edges() == 435);

  Graph f = gen_forest_union(500, 3, 4);
  CHECK(f.num_edges() <= 3 * 499);  // Nash-Williams bound for 3 forests
  CHECK(f.num_edges() >= 499);      // contains a spanning tree

  Graph p = gen_planted_clique(f, 25, 5);
  CHECK(count_triangles(p).total >= 2300);  // C(25,3) == 2300

  CHECK_THROWS_AS(gen_forest_union(1, 0, 0), ParameterError);
}

TEST_CASE("lower-bound families agree on size but not triangles") {
  const std::size_t n = 256;
  const std::uint64_t alpha = 4, t = 8000;
  auto one = gen_lower_bound_family(LowerBoundKind::One, n, alpha, t, 6);
  auto two = gen_lower_bound_family(LowerBoundKind::Two, n, alpha, t, 6);
  CHECK(one.n_total == two.n_total);
  CHECK(one.m_total == two.m_total);
  CHECK(one.graph.num_edges() == one.m_total);
  CHECK(two.graph.num_edges() == two.m_total);
  CHECK(count_triangles(one.graph).total == 0);
  const std::uint64_t c = two.clique_size;
  CHECK(c == 20);  // ceil(8000^{1/3})
  CHECK(count_triangles(two.graph).total == c * (c - 1) * (c - 2) / 6);
  CHECK(two.t_total == c * (c - 1) * (c - 2) / 6);
  CHECK_THROWS_AS(gen_lower_bound_family(LowerBoundKind::One, n, 30, t, 6),
                  ParameterError);  // advice must undercut the clique scale
}

TEST_CASE("edge-list io round trip and malformed input") {
  const std::string path = "/tmp/subcount_io_test.txt";
  Graph g = gen_er(40, 0.2, 8);
  save_edge_list(path, g);
  Graph h = load_edge_list(path);
  CHECK(h.num_vertices() == g.num_vertices());
  CHECK(h.edges() == g.edges());

  {
    std::ofstream bad(path);
    bad << "# n=5\n1 1\n";
  }
  CHECK_THROWS_AS(load_edge_list(path), MalformedFile);
  {
    std::ofstream bad(path);
    bad << "3 4\n";  // missing header
  }
  CHECK_THROWS_AS(load_edge_list(path), MalformedFile);
  CHECK_THROWS_AS(load_edge_list("/tmp/subcount_missing_file.txt"),
                  MalformedFile);
}
