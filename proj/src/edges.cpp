#include "subcount/edges.hpp"

#include <cmath>

namespace subcount {

EdgeEstimateOutcome approx_edges_with_advice(OracleHandle& oracle,
                                             const EdgeRunConfig& cfg) {
  if (cfg.n == 0) throw std::invalid_argument("n must be positive");
  if (!(cfg.m_guess > 0))
    throw std::invalid_argument("m_guess must be positive");
  if (cfg.alpha_advice == 0)
    throw std::invalid_argument("alpha_advice must be positive");
  if (!(cfg.eps > 0 && cfg.eps < 1))
    throw std::invalid_argument("eps must be in (0,1)");
  if (!(cfg.delta > 0 && cfg.delta < 1))
    throw std::invalid_argument("delta must be in (0,1)");

  const double delta = cfg.delta / 2.0;
  const double eps = cfg.eps / 6.0;
  const double alpha = static_cast<double>(cfg.alpha_advice);
  const double n = static_cast<double>(cfg.n);
  const double heavy_threshold = 2.0 * alpha / eps;

  EdgeEstimateOutcome out;

  const auto r = static_cast<std::uint64_t>(
      std::ceil(12.0 * std::log(1.0 / delta) / (eps * eps)));
  out.stats.r = r;
  std::uint64_t heavy = 0;
  for (std::uint64_t i = 0; i < r; ++i) {
    const Edge e = oracle.uniform_edge();
    const auto du = oracle.degree_query(e.u);
    const auto dv = oracle.degree_query(e.v);
    if (static_cast<double>(std::min(du, dv)) > heavy_threshold) ++heavy;
  }
  if (static_cast<double>(heavy) / static_cast<double>(r) > 2.0 * eps) {
    out.bad_advice = true;
    if (!cfg.keep_going_after_reject) {
      out.ledger = oracle.ledger();
      return out;
    }
  }

  const double qd = std::ceil((n * alpha / cfg.m_guess) * 12.0 *
                              std::log(2.0 / delta) / (eps * eps * eps));
  if (qd >= n) {
    // Exact branch: the handshake sum, halved.
    std::uint64_t degsum = 0;
    for (Vertex v = 0; v < cfg.n; ++v) degsum += oracle.degree_query(v);
    out.stats.exact_branch = true;
    out.stats.estimate = static_cast<double>(degsum) / 2.0;
    out.value = out.stats.estimate;
    out.ledger = oracle.ledger();
    return out;
  }

  const auto q = static_cast<std::uint64_t>(qd);
  out.stats.q = q;
  double chi_sum = 0;
  for (std::uint64_t i = 0; i < q; ++i) {
    const Vertex u = oracle.uniform_vertex();
    const auto du = oracle.degree_query(u);
    if (du == 0) continue;  // no neighbor to draw; contributes 0
    const std::uint64_t idx = 1 + oracle.aux_rng().uniform_below(du);
    const Vertex v = *oracle.neighbor_query(u, idx);
    if (static_cast<double>(du) > heavy_threshold) continue;
    const auto dv = oracle.degree_query(v);
    const bool u_first = du != dv ? du < dv : u < v;
    if (u_first) chi_sum += static_cast<double>(du);
  }
  out.stats.estimate = n / static_cast<double>(q) * chi_sum;
  out.value = out.stats.estimate;
  out.ledger = oracle.ledger();
  return out;
}

}  // namespace subcount
