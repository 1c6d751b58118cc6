#pragma once

#include <cstdint>
#include <optional>

#include "subcount/oracle.hpp"

namespace subcount {

struct EdgeRunConfig {
  double m_guess = 0;             // positive
  double eps = 0;                 // in (0,1); rescaled to eps/6 internally
  double delta = 0;               // in (0,1); rescaled to delta/2 internally
  std::uint64_t alpha_advice = 0;
  std::uint64_t n = 0;            // known vertex count
  bool keep_going_after_reject = false;
};

struct EdgeTrialStats {
  std::uint64_t r = 0;        // gate samples
  std::uint64_t q = 0;        // main-loop samples (0 on the exact branch)
  bool exact_branch = false;  // q >= n: all degrees scanned
  double estimate = 0;
};

struct EdgeEstimateOutcome {
  bool bad_advice = false;
  double value = 0;
  EdgeTrialStats stats;
  QueryLedger ledger;
};

// Gate r = ceil(12*ln(1/delta')/eps'^2) uniform edges with the heavy-edge
// indicator d(e) > 2*alpha/eps'; main loop q = ceil((n*alpha/m_guess) *
// 12*ln(2/delta')/eps'^3) vertex/neighbor samples, with the exact degree
// scan when q >= n.
EdgeEstimateOutcome approx_edges_with_advice(OracleHandle& oracle,
                                             const EdgeRunConfig& cfg);

}  // namespace subcount
