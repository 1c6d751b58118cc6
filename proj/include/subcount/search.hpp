#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "subcount/graph.hpp"
#include "subcount/oracle.hpp"

namespace subcount {

struct InnerResult {
  bool bad_advice = false;
  double value = 0;
};

// A(guess, eps, delta, invocation-index). The index identifies the call for
// seed derivation; calls with distinct indices are independent.
using GuessOracle =
    std::function<InnerResult(double, double, double, std::uint64_t)>;

struct GuessOracleSpec {
  GuessOracle run;
  double upper_bound = 0;  // U >= true value
  double ell = 2.0;        // runtime exponent; 2 for triangles
};

struct SearchSchedule {
  double delta_j = 0;
  std::uint64_t k_j = 0;  // repetitions at this guess
};

// delta_j = 1/(40*(j+1)^2*k_j) with k_j = ceil(8*ln(1/delta_j)/eps), solved
// by fixed point; the products k_j*delta_j then sum below 1/5 over all j.
SearchSchedule search_schedule(std::size_t level, double eps);

struct GuessLevel {
  double guess = 0;
  double delta_j = 0;
  std::uint64_t runs = 0;
  double min_value = 0;
  bool accepted = false;
};

struct SearchTrace {
  std::vector<GuessLevel> levels;
  std::optional<std::size_t> accepted_level;
  bool bad_advice = false;
  double output = 0;
};

struct SearchResult {
  bool bad_advice = false;
  double value = 0;
  SearchTrace trace;
};

// Geometric descent over guesses U, U/2, ...; at each guess the inner
// algorithm runs k_j times and the level is accepted when the minimum
// returned value reaches (1-eps) times the guess. Any BadAdvice aborts the
// whole search; a descent below guess 1 returns 0.
SearchResult search(const GuessOracleSpec& spec, double eps);

struct TestableResult {
  bool bad_advice = false;
  double value = 0;
  QueryLedger ledger;
  std::uint64_t inner_runs = 0;
};

// ceil(20*log2(1/delta)) independent searches; BadAdvice on a majority of
// BadAdvice outcomes, otherwise the median of the returned values.
TestableResult run_amplified(
    const std::function<GuessOracleSpec(std::uint64_t rep)>& make_spec,
    double eps, double delta);

struct AdaptiveResult {
  bool all_rejected = false;
  double value = 0;
  QueryLedger ledger;
  std::uint64_t accepted_advice = 0;
};

// Doubling sweep over advice values 2^1, 2^2, ...; returns the first
// non-BadAdvice estimate.
AdaptiveResult adaptive_generic(
    const std::function<TestableResult(std::uint64_t alpha, double delta_bar)>&
        call,
    std::uint64_t max_log, double delta);

// Concrete drivers over a simulated graph. Each inner invocation gets a
// fresh OracleHandle with a seed derived from (seed, repetition, call index);
// ledgers are merged by summation.
TestableResult testable_triangles(const Graph& g, std::uint64_t m, double eps,
                                  double delta, std::uint64_t alpha_advice,
                                  std::uint64_t seed,
                                  std::optional<std::uint64_t> budget = {});
AdaptiveResult adaptive_triangles(const Graph& g, std::uint64_t m, double eps,
                                  double delta, std::uint64_t seed);
TestableResult testable_edges(const Graph& g, std::uint64_t n, double eps,
                              double delta, std::uint64_t alpha_advice,
                              std::uint64_t seed,
                              std::optional<std::uint64_t> budget = {});
AdaptiveResult adaptive_edges(const Graph& g, std::uint64_t n, double eps,
                              double delta, std::uint64_t seed);

}  // namespace subcount
