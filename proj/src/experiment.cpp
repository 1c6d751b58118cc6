#include "subcount/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include "subcount/edges.hpp"
#include "subcount/gen.hpp"
#include "subcount/io.hpp"
#include "subcount/search.hpp"
#include "subcount/triangles.hpp"

namespace subcount {

Algo parse_algo(const std::string& name) {
  if (name == "triangles-testable") return Algo::TrianglesTestable;
  if (name == "triangles-adaptive") return Algo::TrianglesAdaptive;
  if (name == "edges-testable") return Algo::EdgesTestable;
  if (name == "edges-adaptive") return Algo::EdgesAdaptive;
  if (name == "single-guess") return Algo::SingleGuess;
  if (name == "single-guess-edges") return Algo::SingleGuessEdges;
  throw ParameterError("unknown algorithm: " + name);
}

namespace {

std::map<std::string, std::string> parse_kv(const std::string& s) {
  std::map<std::string, std::string> kv;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ParameterError("expected key=value in graph spec: " + item);
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return kv;
}

std::uint64_t want_u64(const std::map<std::string, std::string>& kv,
                       const std::string& key, std::optional<std::uint64_t> dflt = {}) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    if (dflt) return *dflt;
    throw ParameterError("graph spec missing parameter: " + key);
  }
  return std::stoull(it->second);
}

}  // namespace

GraphBundle make_graph(const std::string& spec) {
  auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

  GraphBundle out;
  out.id = spec;
  if (kind == "file") {
    out.graph = load_edge_list(rest);
  } else if (kind == "clique") {
    out.graph = gen_clique(want_u64(parse_kv(rest), "k"));
  } else if (kind == "star") {
    out.graph = gen_star(want_u64(parse_kv(rest), "n"));
  } else if (kind == "er") {
    auto kv = parse_kv(rest);
    out.graph = gen_er(want_u64(kv, "n"), std::stod(kv.at("p")),
                       want_u64(kv, "seed", 0));
  } else if (kind == "forest-union") {
    auto kv = parse_kv(rest);
    out.graph = gen_forest_union(want_u64(kv, "n"), want_u64(kv, "alpha"),
                                 want_u64(kv, "seed", 0));
  } else if (kind == "planted") {
    auto kv = parse_kv(rest);
    const auto seed = want_u64(kv, "seed", 0);
    Graph base = gen_forest_union(want_u64(kv, "n"), want_u64(kv, "alpha"), seed);
    out.graph = gen_planted_clique(base, want_u64(kv, "k"), seed + 1);
  } else if (kind == "lb1" || kind == "lb2") {
    auto kv = parse_kv(rest);
    auto fam = gen_lower_bound_family(
        kind == "lb1" ? LowerBoundKind::One : LowerBoundKind::Two,
        want_u64(kv, "n"), want_u64(kv, "alpha"), want_u64(kv, "t"),
        want_u64(kv, "seed", 0));
    out.graph = std::move(fam.graph);
  } else {
    throw ParameterError("unknown graph spec kind: " + kind);
  }
  out.exact_triangles = count_triangles(out.graph).total;
  return out;
}

namespace {

struct Row {
  std::uint64_t seed = 0;
  std::string kind;  // estimate | bad-advice | all-rejected
  double estimate = 0;
  QueryLedger ledger;
  std::int64_t ms = 0;
};

std::size_t worker_count(std::uint64_t replicas) {
  std::size_t w = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SC_THREADS")) {
    const auto cap = std::strtoull(env, nullptr, 10);
    if (cap >= 1) w = std::min<std::size_t>(w, cap);
  }
  return std::min<std::size_t>(w, replicas);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

std::string run_experiment(const ExperimentConfig& cfg) {
  if (cfg.replicas < 1) throw ParameterError("replicas must be >= 1");
  if (!(cfg.eps > 0 && cfg.eps < 1)) throw ParameterError("eps must be in (0,1)");
  if (!(cfg.delta > 0 && cfg.delta < 1))
    throw ParameterError("delta must be in (0,1)");
  const GraphBundle gb = make_graph(cfg.graph_spec);
  const Graph& g = gb.graph;
  const std::uint64_t m = g.num_edges();
  const std::uint64_t n = g.num_vertices();
  const bool edge_algo =
      cfg.algo == Algo::EdgesTestable || cfg.algo == Algo::EdgesAdaptive ||
      cfg.algo == Algo::SingleGuessEdges;
  const double exact = edge_algo ? static_cast<double>(m)
                                 : static_cast<double>(gb.exact_triangles);
  const std::uint64_t advice = cfg.advice != 0 ? cfg.advice : degeneracy(g);
  const bool needs_guess =
      cfg.algo == Algo::SingleGuess || cfg.algo == Algo::SingleGuessEdges;
  if (needs_guess && !cfg.guess)
    throw ParameterError("single-guess algorithms require --guess");

  std::vector<Row> rows(cfg.replicas);
  auto run_one = [&](std::uint64_t i) {
    Row& row = rows[i];
    row.seed = cfg.base_seed + i;
    const auto start = std::chrono::steady_clock::now();
    try {
      switch (cfg.algo) {
        case Algo::SingleGuess: {
          OracleHandle h(g, row.seed, cfg.budget);
          TriangleRunConfig rc;
          rc.t_guess = *cfg.guess;
          rc.eps = cfg.eps;
          rc.delta = cfg.delta;
          rc.alpha_advice = advice;
          rc.m = m;
          auto r = approx_triangles_with_advice(h, rc);
          row.kind = r.bad_advice ? "bad-advice" : "estimate";
          row.estimate = r.value;
          row.ledger = r.ledger;
          break;
        }
        case Algo::SingleGuessEdges: {
          OracleHandle h(g, row.seed, cfg.budget);
          EdgeRunConfig rc;
          rc.m_guess = *cfg.guess;
          rc.eps = cfg.eps;
          rc.delta = cfg.delta;
          rc.alpha_advice = advice;
          rc.n = n;
          auto r = approx_edges_with_advice(h, rc);
          row.kind = r.bad_advice ? "bad-advice" : "estimate";
          row.estimate = r.value;
          row.ledger = r.ledger;
          break;
        }
        case Algo::TrianglesTestable: {
          auto r = testable_triangles(g, m, cfg.eps, cfg.delta, advice,
                                      row.seed, cfg.budget);
          row.kind = r.bad_advice ? "bad-advice" : "estimate";
          row.estimate = r.value;
          row.ledger = r.ledger;
          break;
        }
        case Algo::EdgesTestable: {
          auto r = testable_edges(g, n, cfg.eps, cfg.delta, advice, row.seed,
                                  cfg.budget);
          row.kind = r.bad_advice ? "bad-advice" : "estimate";
          row.estimate = r.value;
          row.ledger = r.ledger;
          break;
        }
        case Algo::TrianglesAdaptive: {
          auto r = adaptive_triangles(g, m, cfg.eps, cfg.delta, row.seed);
          row.kind = r.all_rejected ? "all-rejected" : "estimate";
          row.estimate = r.value;
          row.ledger = r.ledger;
          break;
        }
        case Algo::EdgesAdaptive: {
          auto r = adaptive_edges(g, n, cfg.eps, cfg.delta, row.seed);
          row.kind = r.all_rejected ? "all-rejected" : "estimate";
          row.estimate = r.value;
          row.ledger = r.ledger;
          break;
        }
      }
    } catch (const BudgetExhausted&) {
      row.kind = "budget-exhausted";
    }
    row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - start)
                 .count();
  };

  const std::size_t workers = worker_count(cfg.replicas);
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < cfg.replicas; ++i) run_one(i);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::uint64_t i = next.fetch_add(1); i < cfg.replicas;
             i = next.fetch_add(1))
          run_one(i);
      });
    for (auto& th : pool) th.join();
  }

  std::ostringstream csv;
  csv << "seed,graph_id,exact,kind,estimate,rel_err,q_degree,q_neighbor,"
         "q_pair,q_edge,q_vertex,ms\n";
  for (const auto& row : rows) {
    csv << row.seed << ',' << gb.id << ',' << fmt(exact) << ',' << row.kind
        << ',';
    if (row.kind == "estimate") {
      csv << fmt(row.estimate) << ',';
      csv << (exact > 0 ? fmt(std::abs(row.estimate - exact) / exact)
                        : fmt(std::abs(row.estimate)));
    } else {
      csv << ',';
    }
    csv << ',' << row.ledger.degree << ',' << row.ledger.neighbor << ','
        << row.ledger.pair << ',' << row.ledger.uniform_edge << ','
        << row.ledger.uniform_vertex << ',' << (cfg.timing ? row.ms : 0)
        << '\n';
  }
  return csv.str();
}

namespace {

std::uint64_t median_u64(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace

SweepResult triangle_scaling_sweep(std::size_t base_n, std::uint64_t base_alpha,
                                   const std::vector<std::size_t>& clique_sizes,
                                   double eps, double delta, std::size_t seeds,
                                   std::uint64_t base_seed) {
  SweepResult out;
  std::ostringstream csv;
  csv << "clique_k,n,m,t,advice,median_queries,curve,ratio\n";
  out.min_ratio = std::numeric_limits<double>::infinity();
  out.max_ratio = 0;
  for (std::size_t k : clique_sizes) {
    Graph base = gen_forest_union(base_n, base_alpha, base_seed);
    Graph g = gen_planted_clique(base, k, base_seed + k);
    const auto t = count_triangles(g).total;
    const auto m = g.num_edges();
    const auto advice = degeneracy(g);
    std::vector<std::uint64_t> queries;
    for (std::size_t s = 0; s < seeds; ++s) {
      OracleHandle h(g, Rng(base_seed).split(1000 * k + s).seed());
      TriangleRunConfig rc;
      rc.t_guess = static_cast<double>(t);
      rc.eps = eps;
      rc.delta = delta;
      rc.alpha_advice = advice;
      rc.m = m;
      auto r = approx_triangles_with_advice(h, rc);
      queries.push_back(r.ledger.total());
    }
    const double med = static_cast<double>(median_u64(queries));
    const double td = static_cast<double>(t);
    const double curve = static_cast<double>(m) * advice / td +
                         static_cast<double>(m) / std::pow(td, 2.0 / 3.0);
    const double ratio = med / curve;
    out.min_ratio = std::min(out.min_ratio, ratio);
    out.max_ratio = std::max(out.max_ratio, ratio);
    csv << k << ',' << g.num_vertices() << ',' << m << ',' << t << ','
        << advice << ',' << fmt(med) << ',' << fmt(curve) << ',' << fmt(ratio)
        << '\n';
  }
  csv << "summary,ratio_spread," << fmt(out.max_ratio / out.min_ratio) << '\n';
  out.csv = csv.str();
  return out;
}

SweepResult edge_scaling_sweep(std::size_t n,
                               const std::vector<std::uint64_t>& alphas,
                               double eps, double delta, std::size_t seeds,
                               std::uint64_t base_seed) {
  SweepResult out;
  std::ostringstream csv;
  csv << "alpha,n,m,median_queries,curve,ratio\n";
  out.min_ratio = std::numeric_limits<double>::infinity();
  out.max_ratio = 0;
  for (std::uint64_t alpha : alphas) {
    Graph g = gen_forest_union(n, alpha, base_seed + alpha);
    const auto m = g.num_edges();
    std::vector<std::uint64_t> queries;
    for (std::size_t s = 0; s < seeds; ++s) {
      OracleHandle h(g, Rng(base_seed).split(1000 * alpha + s).seed());
      EdgeRunConfig rc;
      rc.m_guess = static_cast<double>(m);
      rc.eps = eps;
      rc.delta = delta;
      rc.alpha_advice = alpha;
      rc.n = n;
      auto r = approx_edges_with_advice(h, rc);
      queries.push_back(r.ledger.total());
    }
    const double med = static_cast<double>(median_u64(queries));
    const double curve =
        static_cast<double>(n) * alpha / static_cast<double>(m);
    const double ratio = med / curve;
    out.min_ratio = std::min(out.min_ratio, ratio);
    out.max_ratio = std::max(out.max_ratio, ratio);
    csv << alpha << ',' << n << ',' << m << ',' << fmt(med) << ',' << fmt(curve)
        << ',' << fmt(ratio) << '\n';
  }
  csv << "summary,ratio_spread," << fmt(out.max_ratio / out.min_ratio) << '\n';
  out.csv = csv.str();
  return out;
}

}  // namespace subcount
