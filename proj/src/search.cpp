#include "subcount/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "subcount/edges.hpp"
#include "subcount/triangles.hpp"

namespace subcount {

SearchSchedule search_schedule(std::size_t level, double eps) {
  if (!(eps > 0 && eps < 1))
    throw std::invalid_argument("search_schedule: eps must be in (0,1)");
  const double base = 40.0 * double(level + 1) * double(level + 1);
  double delta = 1.0 / base;
  std::uint64_t k = 0;
  for (int iter = 0; iter < 32; ++iter) {
    const auto k_new = static_cast<std::uint64_t>(
        std::ceil(8.0 * std::log(1.0 / delta) / eps));
    if (k_new == k) break;
    k = k_new;
    delta = 1.0 / (base * static_cast<double>(k));
  }
  return {delta, k};
}

SearchResult search(const GuessOracleSpec& spec, double eps) {
  SearchResult res;
  std::uint64_t invocation = 0;
  for (std::size_t level = 0;; ++level) {
    const double guess =
        spec.upper_bound / std::pow(2.0, static_cast<double>(level));
    if (guess < 1.0) {
      res.value = 0;
      res.trace.output = 0;
      return res;
    }
    const auto [delta_j, k_j] = search_schedule(level, eps);
    GuessLevel lv{guess, delta_j, k_j, 0, false};
    double min_value = std::numeric_limits<double>::infinity();
    for (std::uint64_t i = 0; i < k_j; ++i) {
      const InnerResult r = spec.run(guess, eps, delta_j, invocation++);
      if (r.bad_advice) {
        res.bad_advice = true;
        res.trace.bad_advice = true;
        res.trace.levels.push_back(lv);
        return res;
      }
      min_value = std::min(min_value, r.value);
    }
    lv.min_value = min_value;
    if (min_value >= (1.0 - eps) * guess) {
      lv.accepted = true;
      res.trace.levels.push_back(lv);
      res.trace.accepted_level = level;
      res.trace.output = min_value;
      res.value = min_value;
      return res;
    }
    res.trace.levels.push_back(lv);
  }
}

TestableResult run_amplified(
    const std::function<GuessOracleSpec(std::uint64_t rep)>& make_spec,
    double eps, double delta) {
  if (!(delta > 0 && delta < 1))
    throw std::invalid_argument("delta must be in (0,1)");
  const auto reps = static_cast<std::uint64_t>(
      std::ceil(20.0 * std::log2(1.0 / delta)));
  TestableResult out;
  std::uint64_t bad = 0;
  std::vector<double> values;
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    const SearchResult r = search(make_spec(rep), eps);
    out.inner_runs += 1;
    if (r.bad_advice)
      ++bad;
    else
      values.push_back(r.value);
  }
  if (2 * bad > reps) {
    out.bad_advice = true;
    return out;
  }
  std::sort(values.begin(), values.end());
  const std::size_t nvals = values.size();
  out.value = nvals % 2 == 1
                  ? values[nvals / 2]
                  : 0.5 * (values[nvals / 2 - 1] + values[nvals / 2]);
  return out;
}

AdaptiveResult adaptive_generic(
    const std::function<TestableResult(std::uint64_t alpha, double delta_bar)>&
        call,
    std::uint64_t max_log, double delta) {
  const double delta_bar = delta / (10.0 * static_cast<double>(max_log));
  AdaptiveResult out;
  for (std::uint64_t j = 1; j <= max_log; ++j) {
    const std::uint64_t alpha = 1ULL << j;
    TestableResult r = call(alpha, delta_bar);
    out.ledger += r.ledger;
    if (!r.bad_advice) {
      out.value = r.value;
      out.accepted_advice = alpha;
      return out;
    }
  }
  out.all_rejected = true;
  return out;
}

namespace {

// Ledger/budget pool shared across the many handles a driver spawns.
struct HandlePool {
  const Graph* g;
  std::uint64_t seed;
  std::optional<std::uint64_t> budget;
  QueryLedger total;

  OracleHandle make(std::uint64_t rep, std::uint64_t invocation) {
    std::optional<std::uint64_t> left;
    if (budget) {
      if (total.total() >= *budget) throw BudgetExhausted();
      left = *budget - total.total();
    }
    const std::uint64_t hs = Rng(seed).split(rep).split(invocation).seed();
    return OracleHandle(*g, hs, left);
  }
};

}  // namespace

TestableResult testable_triangles(const Graph& g, std::uint64_t m, double eps,
                                  double delta, std::uint64_t alpha_advice,
                                  std::uint64_t seed,
                                  std::optional<std::uint64_t> budget) {
  HandlePool pool{&g, seed, budget, {}};
  auto make_spec = [&](std::uint64_t rep) {
    GuessOracleSpec spec;
    spec.upper_bound = std::pow(static_cast<double>(m), 1.5);
    spec.ell = 2.0;
    spec.run = [&pool, rep, m, alpha_advice](double guess, double e, double d,
                                             std::uint64_t inv) {
      OracleHandle h = pool.make(rep, inv);
      TriangleRunConfig cfg;
      cfg.t_guess = guess;
      cfg.eps = e / 20.0;
      cfg.delta = d;
      cfg.alpha_advice = alpha_advice;
      cfg.m = m;
      const EstimateOutcome r = approx_triangles_with_advice(h, cfg);
      pool.total += r.ledger;
      return InnerResult{r.bad_advice, r.value};
    };
    return spec;
  };
  TestableResult out = run_amplified(make_spec, eps, delta);
  out.ledger = pool.total;
  return out;
}

AdaptiveResult adaptive_triangles(const Graph& g, std::uint64_t m, double eps,
                                  double delta, std::uint64_t seed) {
  const auto max_log = static_cast<std::uint64_t>(
      std::max(1.0, std::ceil(std::log2(static_cast<double>(m)))));
  std::uint64_t step = 0;
  return adaptive_generic(
      [&](std::uint64_t alpha, double delta_bar) {
        return testable_triangles(g, m, eps, delta_bar, alpha,
                                  Rng(seed).split(step++).seed());
      },
      max_log, delta);
}

TestableResult testable_edges(const Graph& g, std::uint64_t n, double eps,
                              double delta, std::uint64_t alpha_advice,
                              std::uint64_t seed,
                              std::optional<std::uint64_t> budget) {
  HandlePool pool{&g, seed, budget, {}};
  auto make_spec = [&](std::uint64_t rep) {
    GuessOracleSpec spec;
    spec.upper_bound = static_cast<double>(n) * static_cast<double>(n);
    spec.ell = 2.0;
    spec.run = [&pool, rep, n, alpha_advice](double guess, double e, double d,
                                             std::uint64_t inv) {
      OracleHandle h = pool.make(rep, inv);
      EdgeRunConfig cfg;
      cfg.m_guess = guess;
      cfg.eps = e / 10.0;
      cfg.delta = d;
      cfg.alpha_advice = alpha_advice;
      cfg.n = n;
      const EdgeEstimateOutcome r = approx_edges_with_advice(h, cfg);
      pool.total += r.ledger;
      return InnerResult{r.bad_advice, r.value};
    };
    return spec;
  };
  TestableResult out = run_amplified(make_spec, eps, delta);
  out.ledger = pool.total;
  return out;
}

AdaptiveResult adaptive_edges(const Graph& g, std::uint64_t n, double eps,
                              double delta, std::uint64_t seed) {
  const auto max_log = static_cast<std::uint64_t>(
      std::max(1.0, std::ceil(std::log2(static_cast<double>(n)))));
  std::uint64_t step = 0;
  return adaptive_generic(
      [&](std::uint64_t alpha, double delta_bar) {
        return testable_edges(g, n, eps, delta_bar, alpha,
                              Rng(seed).split(step++).seed());
      },
      max_log, delta);
}

}  // namespace subcount
