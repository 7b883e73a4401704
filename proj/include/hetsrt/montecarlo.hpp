// Seeded Monte Carlo estimation of the outage and intercept probabilities
// directly from their defining events, serving as the oracle for every
// closed-form and asymptotic formula.
//
// Per-link probabilities are estimated on two independent draw streams (one
// per cell), and the overall metrics count the AND of the two links' events
// across those streams; the expectation of that AND event equals the product
// of the marginals, matching the product definition of the overall metrics
// even though the two links share channel gains within a single draw.
#pragma once

#include "hetsrt/analytic.hpp"
#include "hetsrt/model.hpp"

#include <cstdint>
#include <vector>

namespace hetsrt {

// One estimated probability: an event count over a trial budget.
struct ProbEstimate {
  double value = 0.0;        // count / trials
  std::uint64_t trials = 0;
  double std_error = 0.0;    // sqrt(value * (1 - value) / trials)
  std::uint64_t seed = 0;
  std::uint64_t count = 0;   // raw event count (value * trials, exactly)
};

// Monte Carlo counterpart of SrtPoint.  The joint fields are diagnostics:
// the macro-AND-small events evaluated on one shared draw, whose expectation
// differs from the product definition whenever the two links share gains.
struct McPoint {
  ProbEstimate p_out_m, p_out_s, p_int_m, p_int_s;
  ProbEstimate p_out_overall, p_int_overall;
  ProbEstimate p_out_joint, p_int_joint;
};

// Estimates all probabilities at one rate point.  Deterministic in
// (config, rates, scheme, trials, seed) regardless of worker count
// (workers = 0 picks the hardware concurrency).
McPoint estimate_point(const SystemConfig& config, const RatePair& rates, Scheme scheme,
                       std::uint64_t trials, std::uint64_t seed, unsigned workers = 0);

// Estimates a whole rate sweep on the SAME draws (common random numbers), so
// estimated curves are monotone in the rates by construction and adjacent
// points differ only by true rate sensitivity, not by sampling noise.
std::vector<McPoint> estimate_curve(const SystemConfig& config,
                                    const std::vector<RatePair>& rates, Scheme scheme,
                                    std::uint64_t trials, std::uint64_t seed,
                                    unsigned workers = 0);

}  // namespace hetsrt
