#pragma once

#include <cstdint>
#include <optional>

#include "subcount/graph.hpp"
#include "subcount/rng.hpp"

namespace subcount {

struct QueryLedger {
  std::uint64_t degree = 0;
  std::uint64_t neighbor = 0;
  std::uint64_t pair = 0;
  std::uint64_t uniform_edge = 0;
  std::uint64_t uniform_vertex = 0;

  std::uint64_t total() const {
    return degree + neighbor + pair + uniform_edge + uniform_vertex;
  }
  QueryLedger& operator+=(const QueryLedger& o) {
    degree += o.degree;
    neighbor += o.neighbor;
    pair += o.pair;
    uniform_edge += o.uniform_edge;
    uniform_vertex += o.uniform_vertex;
    return *this;
  }
  friend bool operator==(const QueryLedger&, const QueryLedger&) = default;
};

struct BudgetExhausted : std::runtime_error {
  BudgetExhausted() : std::runtime_error("query budget exhausted") {}
};

struct UnsupportedQuery : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Augmented query access to a hidden graph: degree, i-th neighbor, pair,
// uniform edge, uniform vertex. Estimators see the graph only through this
// interface. One handle per worker; ledgers merge by summation.
class OracleHandle {
 public:
  OracleHandle(const Graph& g, std::uint64_t seed,
               std::optional<std::uint64_t> budget = std::nullopt)
      : g_(&g), rng_(seed), aux_rng_(Rng(seed).split(0x517EC0DE)), budget_(budget) {}

  std::uint64_t degree_query(Vertex v) {
    check_vertex(v);
    charge(ledger_.degree);
    return g_->degree(v);
  }

  // 1-based index; Null (nullopt) past the end.
  std::optional<Vertex> neighbor_query(Vertex v, std::uint64_t i) {
    check_vertex(v);
    charge(ledger_.neighbor);
    if (i < 1 || i > g_->degree(v)) return std::nullopt;
    return g_->neighbor(v, i - 1);
  }

  bool pair_query(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    charge(ledger_.pair);
    // Binary search in the sorted list of the lower-degree endpoint.
    return g_->has_edge(u, v);
  }

  Edge uniform_edge() {
    if (g_->num_edges() == 0)
      throw UnsupportedQuery("uniform_edge on empty graph");
    charge(ledger_.uniform_edge);
    return g_->edges()[rng_.uniform_below(g_->num_edges())];
  }

  Vertex uniform_vertex() {
    if (g_->num_vertices() == 0)
      throw UnsupportedQuery("uniform_vertex on empty graph");
    charge(ledger_.uniform_vertex);
    return static_cast<Vertex>(rng_.uniform_below(g_->num_vertices()));
  }

  std::size_t num_vertices() const { return g_->num_vertices(); }
  const QueryLedger& ledger() const { return ledger_; }

  // Auxiliary randomness for estimator-side draws (sample indices, weighted
  // sampling); an independent sub-stream of the handle's seed.
  Rng& aux_rng() { return aux_rng_; }

 private:
  void check_vertex(Vertex v) const {
    if (v >= g_->num_vertices())
      throw std::out_of_range("vertex id out of range");
  }
  void charge(std::uint64_t& counter) {
    if (budget_ && ledger_.total() >= *budget_) throw BudgetExhausted();
    ++counter;
  }

  const Graph* g_;
  Rng rng_;
  Rng aux_rng_;
  std::optional<std::uint64_t> budget_;
  QueryLedger ledger_;
};

}  // namespace subcount
