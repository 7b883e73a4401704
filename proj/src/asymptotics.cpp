// High-SNR outage limits, rate inversions, and diversity-order fitting.
#include "hetsrt/asymptotics.hpp"

#include "hetsrt/montecarlo.hpp"
#include "hetsrt/numerics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hetsrt {

namespace {

void require_target(double p, const char* who) {
  if (!(p > 0.0 && p < 1.0)) {
    std::ostringstream msg;
    msg << who << ": intercept target must be in (0,1), got " << p;
    throw std::domain_error(msg.str());
  }
}

constexpr double kRateBracketHi = 30.0;  // bit/s/Hz, beyond any operating point
constexpr double kRateTol = 1e-9;

}  // namespace

RatePair oss_rates_for_intercept(const SystemConfig& c, double rs_m, double rs_s,
                                 double p_int_m, double p_int_s) {
  require_target(p_int_m, "oss_rates_for_intercept");
  require_target(p_int_s, "oss_rates_for_intercept");
  if (!(c.alpha > 0.0 && c.alpha < 1.0))
    throw std::domain_error("oss_rates_for_intercept: requires alpha in (0,1)");
  if (!(c.beta > 0.0))
    throw std::domain_error("oss_rates_for_intercept: requires beta > 0");
  RatePair r;
  r.rs_m = rs_m;
  r.rs_s = rs_s;
  r.ro_m = c.alpha *
           std::log2(std::pow(2.0, rs_m / c.alpha) *
                     (1.0 - c.gamma_m * c.sigma2_me * std::log(p_int_m)));
  r.ro_s = (1.0 - c.alpha) *
           std::log2(std::pow(2.0, rs_s / (1.0 - c.alpha)) *
                     (1.0 - c.gamma_s() * c.sigma2_se * std::log(p_int_s)));
  return r;
}

RatePair il_uss_rates_for_intercept(const SystemConfig& c, double rs_m, double rs_s,
                                    double p_int_m, double p_int_s) {
  require_target(p_int_m, "il_uss_rates_for_intercept");
  require_target(p_int_s, "il_uss_rates_for_intercept");
  if (!(c.beta > 0.0))
    throw std::domain_error("il_uss_rates_for_intercept: requires beta > 0");
  const double phi_me = (1.0 / p_int_m - 1.0) * c.sigma2_me / c.sigma2_se;
  const double phi_se = (1.0 / p_int_s - 1.0) * c.sigma2_se / c.sigma2_me;
  RatePair r;
  r.rs_m = rs_m;
  r.rs_s = rs_s;
  r.ro_m = std::log2(std::pow(2.0, rs_m) * (1.0 + phi_me / c.beta));
  r.ro_s = std::log2(std::pow(2.0, rs_s) * (1.0 + c.beta * phi_se));
  return r;
}

OutagePair oss_asymptotic_outage(const SystemConfig& c, const RatePair& rates,
                                 double p_int_m, double p_int_s) {
  require_target(p_int_m, "oss_asymptotic_outage");
  require_target(p_int_s, "oss_asymptotic_outage");
  if (!(c.alpha > 0.0 && c.alpha < 1.0))
    throw std::domain_error("oss_asymptotic_outage: requires alpha in (0,1)");
  const double exp_m = std::pow(2.0, rates.rs_m / c.alpha) * c.sigma2_me / c.sigma2_mm;
  const double exp_s = std::pow(2.0, rates.rs_s / (1.0 - c.alpha)) * c.sigma2_se / c.sigma2_ss;
  return {1.0 - std::pow(p_int_m, exp_m), 1.0 - std::pow(p_int_s, exp_s)};
}

OutagePair il_uss_asymptotic_outage(const SystemConfig& c, const RatePair& rates,
                                    double p_int_m, double p_int_s) {
  require_target(p_int_m, "il_uss_asymptotic_outage");
  require_target(p_int_s, "il_uss_asymptotic_outage");
  if (!(c.beta > 0.0))
    throw std::domain_error("il_uss_asymptotic_outage: requires beta > 0");
  const double phi_me = (1.0 / p_int_m - 1.0) * c.sigma2_me / c.sigma2_se;
  const double phi_se = (1.0 / p_int_s - 1.0) * c.sigma2_se / c.sigma2_me;
  const double pow_m = std::pow(2.0, rates.rs_m);
  const double pow_s = std::pow(2.0, rates.rs_s);
  const double num_m = c.beta * c.sigma2_sm * (pow_m - 1.0) + phi_me * c.sigma2_sm * pow_m;
  const double num_s = c.sigma2_ms * (pow_s - 1.0) + c.beta * phi_se * c.sigma2_ms * pow_s;
  return {num_m / (c.sigma2_mm + num_m), num_s / (c.beta * c.sigma2_ss + num_s)};
}

double ic_uss_solve_rate_macro(const SystemConfig& c, double rs_m, double p_int_target) {
  require_target(p_int_target, "ic_uss_solve_rate_macro");
  if (!(c.beta > 0.0))
    throw std::domain_error("ic_uss_solve_rate_macro: requires beta > 0");
  // High-SNR limit of the macro wiretap intercept probability as a function
  // of the overall rate; strictly decreasing from 1 (rate -> rs) to 0.
  auto intercept_limit = [&c, rs_m](double ro) {
    const double redundancy_pow = std::pow(2.0, ro - rs_m);
    const double num = c.sigma2_mm * c.sigma2_me - c.beta * c.sigma2_sm * c.sigma2_me * redundancy_pow;
    if (num <= 0.0) return 0.0;  // jamming margin exhausted: no intercept
    const double den = c.beta * c.sigma2_mm * c.sigma2_se * (redundancy_pow - 1.0);
    return theta_exp_e1(num / den);
  };
  auto residual = [&](double ro) { return intercept_limit(ro) - p_int_target; };
  try {
    return bisect_monotone(residual, rs_m + 1e-9, kRateBracketHi, kRateTol);
  } catch (const bracket_error&) {
    std::ostringstream msg;
    msg << "ic_uss_solve_rate_macro: target " << p_int_target
        << " unattainable for rates in (" << rs_m << ", " << kRateBracketHi << "]";
    throw bracket_error(msg.str());
  }
}

double ic_uss_solve_rate_small(const SystemConfig& c, double rs_s, double p_int_target) {
  require_target(p_int_target, "ic_uss_solve_rate_small");
  if (!(c.beta > 0.0))
    throw std::domain_error("ic_uss_solve_rate_small: requires beta > 0");
  auto residual = [&](double ro) {
    const double psi_se = c.sigma2_me * (std::pow(2.0, ro - rs_s) - 1.0) / (c.beta * c.sigma2_se);
    return (1.0 - theta_exp_e1(psi_se)) - p_int_target;
  };
  try {
    return bisect_monotone(residual, rs_s + 1e-9, kRateBracketHi, kRateTol);
  } catch (const bracket_error&) {
    std::ostringstream msg;
    msg << "ic_uss_solve_rate_small: target " << p_int_target
        << " unattainable for rates in (" << rs_s << ", " << kRateBracketHi << "]";
    throw bracket_error(msg.str());
  }
}

OutagePair ic_uss_asymptotic_outage(const SystemConfig& c, const RatePair& rates) {
  if (!(c.beta > 0.0))
    throw std::domain_error("ic_uss_asymptotic_outage: requires beta > 0");
  const double eff = c.sigma2_mm - c.sigma2_sm * c.beta;
  if (!(eff > 0.0))
    throw std::domain_error("ic_uss_asymptotic_outage: requires beta < sigma2_mm/sigma2_sm");
  const double p_out_m = (std::pow(2.0, rates.ro_m) - 1.0) / (eff * c.gamma_m);
  const double psi_ss = c.sigma2_ms * (std::pow(2.0, rates.ro_s) - 1.0) / (c.beta * c.sigma2_ss);
  return {p_out_m, theta_exp_e1(psi_ss)};
}

DiversityReport diversity_report(const SystemConfig& config, double p_int_constraint,
                                 Scheme scheme, const std::vector<double>& snr_grid_db,
                                 double rs, std::uint64_t fallback_trials,
                                 std::uint64_t fallback_seed) {
  require_target(p_int_constraint, "diversity_report");
  if (snr_grid_db.size() < 4)
    throw std::domain_error("diversity_report: need >= 4 grid SNRs");
  for (std::size_t i = 1; i < snr_grid_db.size(); ++i)
    if (!(snr_grid_db[i] > snr_grid_db[i - 1]))
      throw std::domain_error("diversity_report: SNR grid must be strictly increasing");
  if (!(snr_grid_db.back() - snr_grid_db.front() >= 20.0))
    throw std::domain_error("diversity_report: SNR grid must span >= 20 dB");

  DiversityReport report;
  report.scheme = scheme;
  report.claimed_order = scheme == Scheme::ic_uss ? 1 : 0;

  std::vector<std::pair<double, double>> points;
  for (double db : snr_grid_db) {
    SystemConfig c = config;
    c.gamma_m = db_to_linear(db);
    RatePair rates;
    switch (scheme) {
      case Scheme::oss:
        rates = oss_rates_for_intercept(c, rs, rs, p_int_constraint, p_int_constraint);
        break;
      case Scheme::il_uss:
        rates = il_uss_rates_for_intercept(c, rs, rs, p_int_constraint, p_int_constraint);
        break;
      case Scheme::ic_uss:
        rates.rs_m = rates.rs_s = rs;
        rates.ro_m = ic_uss_solve_rate_macro(c, rates.rs_m, p_int_constraint);
        rates.ro_s = ic_uss_solve_rate_small(c, rates.rs_s, p_int_constraint);
        break;
    }
    double outage;
    try {
      outage = analytic_point(scheme, c, rates).p_out_overall;
    } catch (const std::exception&) {
      outage = estimate_point(c, rates, scheme, fallback_trials, fallback_seed)
                   .p_out_overall.value;
    }
    report.snr_grid.push_back(c.gamma_m);
    report.outage_values.push_back(outage);
    report.rates.push_back(rates);
    points.emplace_back(c.gamma_m, outage);
  }
  report.fitted_order = diversity_order_fit(points);
  return report;
}

}  // namespace hetsrt
