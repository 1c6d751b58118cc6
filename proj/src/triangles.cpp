#include "subcount/triangles.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace subcount {

namespace {

constexpr double kEpsCap = 1.0 / 20.0;  // analysis requires eps <= 1/20
constexpr double kMaxSimulatedSamples = 1e10;

void check_unit(double x, const char* name) {
  if (!(x > 0.0 && x < 1.0))
    throw std::invalid_argument(std::string(name) + " must be in (0,1)");
}

}  // namespace

Thresholds compute_thresholds(double m, double eps, double alpha_advice,
                              double t_guess) {
  if (!(m > 0) || !(alpha_advice > 0) || !(t_guess > 0))
    throw std::invalid_argument("compute_thresholds: inputs must be positive");
  check_unit(eps, "eps");
  Thresholds th;
  th.gamma = std::max(alpha_advice, std::cbrt(t_guess));
  th.tau_d = 8.0 * m * th.gamma * th.gamma / (eps * t_guess);
  th.tau_t = 12.0 * th.gamma / eps;
  return th;
}

Heaviness is_heavy(OracleHandle& oracle, const Edge& e, const Thresholds& th,
                   double delta, std::uint64_t m, HeavinessCache& cache) {
  if (auto hit = cache.lookup(e)) return *hit;

  const auto du = oracle.degree_query(e.u);
  const auto dv = oracle.degree_query(e.v);
  const std::uint64_t d = std::min(du, dv);
  const Vertex anchor = (du < dv || (du == dv && e.u < e.v)) ? e.u : e.v;
  const Vertex other = anchor == e.u ? e.v : e.u;

  Heaviness verdict;
  if (static_cast<double>(d) > th.tau_d) {
    verdict = Heaviness::Heavy;
  } else {
    const auto k = static_cast<std::uint64_t>(std::ceil(
        18.0 * (static_cast<double>(d) / th.tau_t) * std::log(10.0 * m / delta)));
    std::uint64_t witnessed = 0;
    for (std::uint64_t i = 0; i < k; ++i) {
      const std::uint64_t idx = 1 + oracle.aux_rng().uniform_below(d);
      const auto w = oracle.neighbor_query(anchor, idx);
      if (w && *w != other && oracle.pair_query(*w, other)) ++witnessed;
    }
    verdict = static_cast<double>(witnessed) >
                      1.5 * static_cast<double>(k) * th.tau_t / d
                  ? Heaviness::Heavy
                  : Heaviness::NotHeavy;
  }
  cache.store(e, verdict);
  return verdict;
}

bool is_assigned(OracleHandle& oracle, const Edge& e, Vertex w,
                 const Thresholds& th, double delta, std::uint64_t m,
                 HeavinessCache& cache) {
  const Edge sides[3] = {e, make_edge(e.u, w), make_edge(e.v, w)};
  Heaviness verdicts[3];
  for (int i = 0; i < 3; ++i)
    verdicts[i] = is_heavy(oracle, sides[i], th, delta, m, cache);
  if (verdicts[0] == Heaviness::Heavy) return false;
  for (int i = 1; i < 3; ++i)
    if (verdicts[i] == Heaviness::NotHeavy && edge_less(sides[i], sides[0]))
      return false;
  return true;
}

double triangle_sample_size(std::uint64_t m, double eps, double delta,
                            double t_guess, const Thresholds& th) {
  const double md = static_cast<double>(m);
  const double lg = std::log(4.0 / delta);
  const double r1 = 16.0 * md * th.tau_t * lg / (eps * eps * t_guess);
  const double r2 = 30.0 * md * lg / std::pow(eps * t_guess, 2.0 / 3.0);
  return std::ceil(std::max(r1, r2));
}

EstimateOutcome approx_triangles_with_advice(OracleHandle& oracle,
                                             const TriangleRunConfig& cfg) {
  if (cfg.m == 0) throw std::invalid_argument("m must be positive");
  if (!(cfg.t_guess > 0))
    throw std::invalid_argument("t_guess must be positive");
  if (cfg.alpha_advice == 0)
    throw std::invalid_argument("alpha_advice must be positive");
  check_unit(cfg.eps, "eps");
  check_unit(cfg.delta, "delta");

  const double eps = std::min(cfg.eps, kEpsCap);
  const double delta = cfg.delta;
  const double m = static_cast<double>(cfg.m);
  const Thresholds th =
      compute_thresholds(m, eps, static_cast<double>(cfg.alpha_advice),
                         cfg.t_guess);

  EstimateOutcome out;
  const double rd = triangle_sample_size(cfg.m, eps, delta, cfg.t_guess, th);
  if (rd > kMaxSimulatedSamples)
    throw std::length_error("triangle estimator sample size too large to simulate");
  const auto r = static_cast<std::uint64_t>(rd);
  out.stats.r = r;

  struct Sampled {
    Edge e;
    std::uint64_t d;
    Vertex anchor;
  };
  std::vector<Sampled> R;
  R.reserve(r);
  std::uint64_t d_R = 0;
  for (std::uint64_t i = 0; i < r; ++i) {
    const Edge e = oracle.uniform_edge();
    const auto du = oracle.degree_query(e.u);
    const auto dv = oracle.degree_query(e.v);
    const std::uint64_t d = std::min(du, dv);
    const Vertex anchor = (du < dv || (du == dv && e.u < e.v)) ? e.u : e.v;
    R.push_back({e, d, anchor});
    d_R += d;
  }
  out.stats.d_R = static_cast<double>(d_R);

  auto reject = [&](RejectReason why) {
    if (!out.bad_advice) {
      out.bad_advice = true;
      out.reason = why;
    }
  };

  if (static_cast<double>(d_R) >
      static_cast<double>(r) * static_cast<double>(cfg.alpha_advice) * 4.0 / delta) {
    reject(RejectReason::DegreeSumReject);
    if (!cfg.keep_going_after_reject) {
      out.ledger = oracle.ledger();
      return out;
    }
  }

  HeavinessCache cache;  // shared between the gate and the main loop
  std::uint64_t heavy = 0;
  for (const auto& s : R)
    if (is_heavy(oracle, s.e, th, delta, cfg.m, cache) == Heaviness::Heavy)
      ++heavy;
  if (static_cast<double>(heavy) / static_cast<double>(r) >
      2.5 * std::pow(eps * cfg.t_guess, 2.0 / 3.0) / m) {
    reject(RejectReason::HeavyFractionReject);
    if (!cfg.keep_going_after_reject) {
      out.ledger = oracle.ledger();
      return out;
    }
  }

  // d(e)-proportional sampler over R: cumulative sums + binary search.
  std::vector<std::uint64_t> cum(R.size());
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < R.size(); ++i) {
    acc += R[i].d;
    cum[i] = acc;
  }

  const auto s_count = static_cast<std::uint64_t>(std::ceil(
      (static_cast<double>(d_R) / (static_cast<double>(r) * cfg.t_guess / m)) *
      10.0 * std::log(8.0 / delta) / (eps * eps)));
  out.stats.s = s_count;

  std::uint64_t chi_sum = 0;
  for (std::uint64_t i = 0; i < s_count; ++i) {
    const std::uint64_t x = oracle.aux_rng().uniform_below(d_R);
    const auto idx =
        std::upper_bound(cum.begin(), cum.end(), x) - cum.begin();
    const auto& s = R[idx];
    const std::uint64_t nidx = 1 + oracle.aux_rng().uniform_below(s.d);
    const auto w = oracle.neighbor_query(s.anchor, nidx);
    const Vertex other = s.anchor == s.e.u ? s.e.v : s.e.u;
    if (w && *w != other && oracle.pair_query(*w, other)) {
      ++out.stats.hits;
      if (is_assigned(oracle, s.e, *w, th, delta, cfg.m, cache)) ++chi_sum;
    }
  }
  out.stats.chi = static_cast<double>(chi_sum) / static_cast<double>(s_count);
  out.stats.estimate =
      (static_cast<double>(d_R) * m / static_cast<double>(r)) * out.stats.chi;
  out.value = out.stats.estimate;
  out.ledger = oracle.ledger();
  return out;
}

}  // namespace subcount
