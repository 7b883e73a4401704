// High-SNR machinery: outage under a per-link intercept-probability
// constraint, constraint-to-rate inversions (closed-form where the algebra
// permits, monotone bisection otherwise), outage floors, and numeric
// verification of the secrecy diversity orders.
#pragma once

#include "hetsrt/analytic.hpp"
#include "hetsrt/model.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace hetsrt {

// Per-link outage pair (macro, small).
using OutagePair = std::pair<double, double>;

// Overall rates meeting per-link intercept targets for the orthogonal
// scheme, from the closed inversion of its wiretap formulas.  These depend
// on the configured SNR (the eavesdropper benefits from power too).
RatePair oss_rates_for_intercept(const SystemConfig& config, double rs_m, double rs_s,
                                 double p_int_m, double p_int_s);

// Same for the interference-limited scheme; its inversion is SNR-free
// because interference and signal scale together.
RatePair il_uss_rates_for_intercept(const SystemConfig& config, double rs_m, double rs_s,
                                    double p_int_m, double p_int_s);

// High-SNR outage limits of the orthogonal scheme at given intercept
// targets.  Constants in SNR: the diversity-zero signature.
OutagePair oss_asymptotic_outage(const SystemConfig& config, const RatePair& rates,
                                 double p_int_m, double p_int_s);

// High-SNR outage floors of the interference-limited scheme at given
// intercept targets (signal-to-interference-limited residuals).
OutagePair il_uss_asymptotic_outage(const SystemConfig& config, const RatePair& rates,
                                    double p_int_m, double p_int_s);

// Overall macro rate whose high-SNR-limit intercept probability equals the
// target, for the interference-canceled scheme; monotone bisection on
// (rs_m, 30] with the theta*e^theta*E1(theta) = target equality.
double ic_uss_solve_rate_macro(const SystemConfig& config, double rs_m, double p_int_target);

// Small-cell counterpart: 1 - psi*e^psi*E1(psi) = target.
double ic_uss_solve_rate_small(const SystemConfig& config, double rs_s, double p_int_target);

// High-SNR outage of the interference-canceled scheme at the given rates:
// the macro term decays exactly as 1/SNR (diversity one), the small-cell
// term is a strictly positive floor.
OutagePair ic_uss_asymptotic_outage(const SystemConfig& config, const RatePair& rates);

// Outcome of a diversity-order check over an SNR grid.
struct DiversityReport {
  Scheme scheme = Scheme::oss;
  std::vector<double> snr_grid;       // linear, strictly increasing
  std::vector<double> outage_values;  // constrained overall outage per SNR
  std::vector<RatePair> rates;        // solved rates per SNR
  double fitted_order = 0.0;          // -d log P / d log SNR, least squares
  int claimed_order = 0;              // 0 / 0 / 1 by scheme
};

// For each grid SNR: solve both links' rates for the per-link intercept
// constraint (both secrecy rates = rs), evaluate the overall outage from the
// formula layer (falling back to Monte Carlo when the formulas refuse the
// regime), and fit the log-log slope.  Grid must have >= 4 points spanning
// >= 20 dB.
DiversityReport diversity_report(const SystemConfig& config, double p_int_constraint,
                                 Scheme scheme, const std::vector<double>& snr_grid_db,
                                 double rs = 0.5,
                                 std::uint64_t fallback_trials = 1'000'000,
                                 std::uint64_t fallback_seed = 12345);

}  // namespace hetsrt
