// Implementation of the numeric kernels: E1 by series / continued fraction,
// the outage integral by adaptive Gauss-Kronrod, and the diversity-order fit.
#include "hetsrt/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hetsrt {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Series branch, valid and fast for theta <= 1:
//   E1(t) = -gamma - ln t + sum_{k>=1} (-1)^{k+1} t^k / (k * k!)
double e1_series(double theta) {
  double sum = -kEulerGamma - std::log(theta);
  double term = 1.0;  // t^k / k!
  for (int k = 1; k <= 64; ++k) {
    term *= -theta / k;
    double contrib = -term / k;
    sum += contrib;
    if (std::abs(contrib) < 1e-16 * std::abs(sum)) break;
  }
  return sum;
}

// Continued-fraction branch for theta > 1 (modified Lentz).  Returns
// K(theta) = e^{theta} * E1(theta); the caller decides whether to multiply
// by e^{-theta} (E1 itself) or by theta (the stable theta*e^theta*E1 form).
double e1_cf_scaled(double theta) {
  const double tiny = 1e-300;
  double b = theta + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 200; ++i) {
    double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-14) break;
  }
  return h;
}

}  // namespace

double exp_integral_e1(double theta) {
  if (!(theta > 0.0))
    throw std::domain_error("exp_integral_e1: requires theta > 0");
  if (theta <= 1.0) return e1_series(theta);
  return std::exp(-theta) * e1_cf_scaled(theta);
}

double theta_exp_e1(double theta) {
  if (!(theta >= 0.0))
    throw std::domain_error("theta_exp_e1: requires theta >= 0");
  if (theta == 0.0) return 0.0;
  if (theta <= 1.0) return theta * std::exp(theta) * e1_series(theta);
  return theta * e1_cf_scaled(theta);  // e^theta cancels inside the fraction
}

// ---- adaptive Gauss-Kronrod quadrature for the outage integral ----

namespace {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo, hi, value, error;
};

template <typename F>
Segment gauss_kronrod_15(F&& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double fv[15];
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(center - half * kXgk[j]);
    fv[14 - j] = f(center + half * kXgk[j]);
  }
  fv[7] = f(center);
  double kronrod = kWgk[7] * fv[7];
  double gauss = kWg[3] * fv[7];
  for (int j = 0; j < 7; ++j) {
    kronrod += kWgk[j] * (fv[j] + fv[14 - j]);
    if (j % 2 == 1) gauss += kWg[j / 2] * (fv[j] + fv[14 - j]);
  }
  return {lo, hi, kronrod * half, std::abs(kronrod - gauss) * half};
}

}  // namespace

double srt_integral(double a, double b, double sigma2, const QuadratureSpec& spec) {
  if (!(a >= 0.0) || !(b >= 0.0))
    throw std::domain_error("srt_integral: requires a >= 0 and b >= 0");
  if (!(sigma2 > 0.0))
    throw std::domain_error("srt_integral: requires sigma2 > 0");
  if (!(spec.rel_tol > 0.0 && spec.rel_tol < 1.0))
    throw std::invalid_argument("srt_integral: rel_tol must be in (0,1)");
  if (!(spec.abs_tol >= 0.0))
    throw std::invalid_argument("srt_integral: abs_tol must be >= 0");
  if (spec.max_subdivisions < 1)
    throw std::invalid_argument("srt_integral: max_subdivisions must be >= 1");

  auto integrand = [a, b, sigma2](double x) -> double {
    if (x <= 0.0) return (a == 0.0 && b == 0.0) ? 1.0 : 0.0;
    const double sx = sigma2 * x;
    const double frac = (a == 0.0) ? 1.0 : sx / (a + sx);
    return frac * std::exp(-x - b / sx);
  };

  // Split at the interior peak scale of exp(-x - b/(sigma2 x)).
  const double x_peak = (b > 0.0) ? std::sqrt(b / sigma2) : 0.0;

  // Truncation point: the integrand is bounded by e^-x, so the dropped tail
  // is below e^-X; push that below the absolute tolerance.  The integral
  // itself scales like e^(-2*x_peak), so the cut must also clear that depth
  // plus the relative tolerance or the tail stays visible in relative terms.
  const double tail_tol = std::max(spec.abs_tol * 0.25, 1e-15);
  const double x_max =
      std::min(700.0, std::max({30.0, -std::log(tail_tol) + 2.0,
                                2.0 * x_peak - std::log(spec.rel_tol) + 7.0}));

  std::vector<Segment> segments;
  if (x_peak > 0.0 && x_peak < x_max) {
    segments.push_back(gauss_kronrod_15(integrand, 0.0, x_peak));
    segments.push_back(gauss_kronrod_15(integrand, x_peak, x_max));
  } else {
    segments.push_back(gauss_kronrod_15(integrand, 0.0, x_max));
  }

  std::size_t splits = 0;
  while (true) {
    double total = 0.0, total_err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < segments.size(); ++i) {
      total += segments[i].value;
      total_err += segments[i].error;
      if (segments[i].error > segments[worst].error) worst = i;
    }
    const double target = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    if (total_err <= target) return total;
    if (splits >= spec.max_subdivisions)
      throw convergence_error("srt_integral: tolerance not reached within max subdivisions",
                              total, total_err);
    Segment seg = segments[worst];
    const double mid = 0.5 * (seg.lo + seg.hi);
    segments[worst] = gauss_kronrod_15(integrand, seg.lo, mid);
    segments.push_back(gauss_kronrod_15(integrand, mid, seg.hi));
    ++splits;
  }
}

double diversity_order_fit(const std::vector<std::pair<double, double>>& snr_prob_points) {
  if (snr_prob_points.size() < 2)
    throw std::domain_error("diversity_order_fit: need at least 2 points");
  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& [snr, prob] : snr_prob_points) {
    if (!(snr > 0.0) || !(prob > 0.0))
      throw std::domain_error("diversity_order_fit: snr and probability must be > 0");
    mean_x += std::log(snr);
    mean_y += std::log(prob);
  }
  const double n = static_cast<double>(snr_prob_points.size());
  mean_x /= n;
  mean_y /= n;
  double sxy = 0.0, sxx = 0.0;
  for (const auto& [snr, prob] : snr_prob_points) {
    const double dx = std::log(snr) - mean_x;
    sxy += dx * (std::log(prob) - mean_y);
    sxx += dx * dx;
  }
  if (sxx == 0.0)
    throw std::domain_error("diversity_order_fit: snr values must not all coincide");
  return -(sxy / sxx);
}

}  // namespace hetsrt
