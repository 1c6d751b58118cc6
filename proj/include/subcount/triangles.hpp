#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "subcount/oracle.hpp"

namespace subcount {

// Derived per-run quantities: gamma = max(alpha_advice, t_guess^{1/3}),
// tau_d = 8*m*gamma^2/(eps*t_guess), tau_t = 12*gamma/eps.
struct Thresholds {
  double gamma = 0;
  double tau_d = 0;
  double tau_t = 0;
};

Thresholds compute_thresholds(double m, double eps, double alpha_advice,
                              double t_guess);

enum class Heaviness { Heavy, NotHeavy };

// Memoized per-edge verdicts; stands in for "re-use the same random bits".
// Once set, a verdict never changes within a run.
class HeavinessCache {
 public:
  std::optional<Heaviness> lookup(const Edge& e) const {
    auto it = map_.find(key(e));
    return it == map_.end() ? std::nullopt : std::optional(it->second);
  }
  void store(const Edge& e, Heaviness h) { map_.emplace(key(e), h); }
  std::size_t size() const { return map_.size(); }

 private:
  static std::uint64_t key(const Edge& e) {
    return (std::uint64_t(e.u) << 32) | e.v;
  }
  std::unordered_map<std::uint64_t, Heaviness> map_;
};

// Degree-gate plus neighbor-sampling heaviness test. A cached edge answers
// with zero new queries.
Heaviness is_heavy(OracleHandle& oracle, const Edge& e, const Thresholds& th,
                   double delta, std::uint64_t m, HeavinessCache& cache);

// Requires {e.u, e.v, w} to be a triangle (caller checked via pair query).
// True iff e is the first not-heavy edge of the triangle in the fixed
// lexicographic edge order.
bool is_assigned(OracleHandle& oracle, const Edge& e, Vertex w,
                 const Thresholds& th, double delta, std::uint64_t m,
                 HeavinessCache& cache);

struct TriangleRunConfig {
  double t_guess = 0;            // positive
  double eps = 0;                // in (0,1); clamped to <= 1/20 internally
  double delta = 0;              // in (0,1)
  std::uint64_t alpha_advice = 0;
  std::uint64_t m = 0;           // known edge count
  // When set, rejection gates are recorded but the run continues, so the
  // estimate random variable is computed for every outcome.
  bool keep_going_after_reject = false;
};

enum class RejectReason { DegreeSumReject, HeavyFractionReject };

struct TrialStats {
  std::uint64_t r = 0;       // |R|
  double d_R = 0;            // sum of edge degrees over R
  std::uint64_t s = 0;       // main-loop count
  double chi = 0;            // mean of the chi_i indicators
  std::uint64_t hits = 0;    // IsAssigned invocations (witnessed triangles)
  double estimate = 0;       // (d(R)*m/|R|) * chi
};

struct EstimateOutcome {
  bool bad_advice = false;
  std::optional<RejectReason> reason;
  double value = 0;  // meaningful when !bad_advice (or keep_going was set)
  TrialStats stats;
  QueryLedger ledger;
};

// r = ceil(max(16*m*tau_t*ln(4/delta)/(eps^2*t_guess),
//              30*m*ln(4/delta)/(eps*t_guess)^{2/3}))
double triangle_sample_size(std::uint64_t m, double eps, double delta,
                            double t_guess, const Thresholds& th);

EstimateOutcome approx_triangles_with_advice(OracleHandle& oracle,
                                             const TriangleRunConfig& cfg);

}  // namespace subcount
