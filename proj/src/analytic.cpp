// Closed-form probability formulas for the three sharing schemes.
#include "hetsrt/analytic.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace hetsrt {

namespace {

constexpr double kLn2 = 0.69314718055994530941723212145818;

// 2^x - 1 without cancellation for small x.
double pow2m1(double x) { return std::expm1(x * kLn2); }

// num / den with the convention 0/0 = 0 (a zero rate threshold stays zero
// even when the denominator SNR is zero).
double ratio0(double num, double den) { return num == 0.0 ? 0.0 : num / den; }

// 1 - exp(-x) without cancellation for small x; handles x = +inf.
double one_minus_exp_neg(double x) { return -std::expm1(-x); }

void require_valid(const SystemConfig& config, Scheme scheme, const RatePair& rates,
                   const char* who) {
  auto errors = validate(config, scheme);
  auto rate_errors = validate(rates);
  errors.insert(errors.end(), rate_errors.begin(), rate_errors.end());
  if (!errors.empty()) {
    std::ostringstream msg;
    msg << who << ": invalid inputs:";
    for (const auto& e : errors) msg << ' ' << e << ';';
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

SrtPoint oss_point(const SystemConfig& c, const RatePair& r) {
  require_valid(c, Scheme::oss, r, "oss_point");
  SrtPoint p;
  const double gs = c.gamma_s();
  if (c.alpha == 0.0) {
    p.p_out_m = r.ro_m > 0.0 ? 1.0 : 0.0;
    p.p_int_m = r.ro_m - r.rs_m > 0.0 ? 0.0 : 1.0;
  } else {
    const double delta_m = ratio0(pow2m1(r.ro_m / c.alpha), c.gamma_m);
    const double delta_dm = ratio0(pow2m1((r.ro_m - r.rs_m) / c.alpha), c.gamma_m);
    p.p_out_m = one_minus_exp_neg(delta_m / c.sigma2_mm);
    p.p_int_m = std::exp(-delta_dm / c.sigma2_me);
  }
  if (c.alpha == 1.0) {
    p.p_out_s = r.ro_s > 0.0 ? 1.0 : 0.0;
    p.p_int_s = r.ro_s - r.rs_s > 0.0 ? 0.0 : 1.0;
  } else {
    const double delta_s = ratio0(pow2m1(r.ro_s / (1.0 - c.alpha)), gs);
    const double delta_ds = ratio0(pow2m1((r.ro_s - r.rs_s) / (1.0 - c.alpha)), gs);
    p.p_out_s = one_minus_exp_neg(delta_s / c.sigma2_ss);
    p.p_int_s = std::exp(-delta_ds / c.sigma2_se);
  }
  p.p_out_overall = p.p_out_m * p.p_out_s;
  p.p_int_overall = p.p_int_m * p.p_int_s;
  return p;
}

SrtPoint il_uss_point(const SystemConfig& c, const RatePair& r) {
  require_valid(c, Scheme::il_uss, r, "il_uss_point");
  SrtPoint p;
  const double gs = c.gamma_s();
  const double lambda_m = ratio0(pow2m1(r.ro_m), c.gamma_m);
  const double lambda_s = ratio0(pow2m1(r.ro_s), gs);
  const double lambda_dm = ratio0(pow2m1(r.ro_m - r.rs_m), c.gamma_m);
  const double lambda_ds = ratio0(pow2m1(r.ro_s - r.rs_s), gs);
  p.p_out_m = 1.0 - c.sigma2_mm / (gs * c.sigma2_sm * lambda_m + c.sigma2_mm) *
                        std::exp(-lambda_m / c.sigma2_mm);
  p.p_out_s = 1.0 - c.sigma2_ss / (c.gamma_m * c.sigma2_ms * lambda_s + c.sigma2_ss) *
                        std::exp(-lambda_s / c.sigma2_ss);
  p.p_int_m = c.sigma2_me / (c.sigma2_me + gs * c.sigma2_se * lambda_dm) *
              std::exp(-lambda_dm / c.sigma2_me);
  p.p_int_s = c.sigma2_se / (c.sigma2_se + c.gamma_m * c.sigma2_me * lambda_ds) *
              std::exp(-lambda_ds / c.sigma2_se);
  p.p_out_overall = p.p_out_m * p.p_out_s;
  p.p_int_overall = p.p_int_m * p.p_int_s;
  return p;
}

double ic_uss_macro_outage(const SystemConfig& c, const RatePair& r) {
  require_valid(c, Scheme::ic_uss, r, "ic_uss_macro_outage");
  const double lambda_m = ratio0(pow2m1(r.ro_m), c.gamma_m);
  // The canceled link sees an effective exponential gain with mean
  // sigma2_mm - beta*sigma2_sm (exact).
  const double eff = c.sigma2_mm - c.beta * c.sigma2_sm;
  return eff > 0.0 ? one_minus_exp_neg(lambda_m / eff) : (lambda_m > 0.0 ? 1.0 : 0.0);
}

SrtPoint ic_uss_point(const SystemConfig& c, const RatePair& r, const QuadratureSpec& quad) {
  require_valid(c, Scheme::ic_uss, r, "ic_uss_point");
  SrtPoint p;
  p.out_s_kind = Exactness::asymptotic;
  p.int_m_kind = Exactness::asymptotic;
  p.int_s_kind = Exactness::asymptotic;
  const double gs = c.gamma_s();
  const double lambda_s = ratio0(pow2m1(r.ro_s), gs);
  const double lambda_dm = ratio0(pow2m1(r.ro_m - r.rs_m), c.gamma_m);
  const double lambda_ds = ratio0(pow2m1(r.ro_s - r.rs_s), gs);

  p.p_out_m = ic_uss_macro_outage(c, r);

  // Small-cell outage via the shared integral kernel.
  if (lambda_s == 0.0) {
    p.p_out_s = 0.0;
  } else if (std::isinf(lambda_s)) {
    p.p_out_s = 1.0;  // silent small cell (beta = 0)
  } else {
    p.p_out_s = 1.0 - srt_integral(c.sigma2_ms * lambda_s * c.gamma_m, lambda_s,
                                   c.sigma2_ss, quad);
  }

  // Macro wiretap: intercept 1 at zero redundancy; otherwise the
  // exponential-integral form, stable as theta_exp_e1 * exp(...).
  if (lambda_dm == 0.0) {
    p.p_int_m = 1.0;
  } else {
    const double omega = 1.0 - c.sigma2_sm * c.beta * std::pow(2.0, r.ro_m - r.rs_m) / c.sigma2_mm;
    if (omega <= 0.0) {
      std::ostringstream msg;
      msg << "ic_uss_point: degenerate regime, omega = " << omega
          << " <= 0 (redundancy too large for the wiretap formula); use Monte Carlo";
      throw degenerate_regime_error(msg.str(), omega);
    }
    const double theta = omega * c.sigma2_me / (lambda_dm * c.sigma2_se * gs);
    const double factor = std::isinf(theta) ? 1.0 : theta_exp_e1(theta);
    p.p_int_m = factor * std::exp(-lambda_dm / (c.sigma2_me * omega));
  }

  // Small-cell wiretap via the same integral kernel.
  if (lambda_ds == 0.0) {
    p.p_int_s = 1.0;
  } else if (std::isinf(lambda_ds)) {
    p.p_int_s = 0.0;
  } else {
    p.p_int_s = srt_integral(c.sigma2_me * lambda_ds * c.gamma_m, lambda_ds,
                             c.sigma2_se, quad);
  }

  p.p_out_overall = p.p_out_m * p.p_out_s;
  p.p_int_overall = p.p_int_m * p.p_int_s;
  return p;
}

SrtPoint analytic_point(Scheme scheme, const SystemConfig& c, const RatePair& r,
                        const QuadratureSpec& quad) {
  switch (scheme) {
    case Scheme::oss: return oss_point(c, r);
    case Scheme::il_uss: return il_uss_point(c, r);
    case Scheme::ic_uss: return ic_uss_point(c, r, quad);
  }
  throw std::logic_error("analytic_point: unknown scheme");
}

bool ic_uss_asymptotics_valid(const SystemConfig& c, double ro, double bound) {
  return std::pow(2.0, ro) * c.sigma2_sm <= bound;
}

}  // namespace hetsrt
