// Special functions and generic numeric routines shared by the closed-form
// and asymptotic probability layers: the exponential integral E1, the
// spectrum-sharing outage integral, monotone bisection, and a log-log slope
// fit used to estimate diversity orders.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hetsrt {

// Tolerances for the adaptive quadrature behind srt_integral.
struct QuadratureSpec {
  double rel_tol = 1e-8;        // in (0,1)
  double abs_tol = 1e-12;       // >= 0
  std::size_t max_subdivisions = 200;  // >= 1
};

// Thrown when adaptive quadrature cannot reach the requested tolerance;
// carries the best estimate and its error bound so callers can decide
// whether to accept it.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double estimate, double error_bound)
      : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}
  double estimate() const { return estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

// Thrown by bisect_monotone when the bracket does not straddle a root.
class bracket_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// E1(theta) = integral_theta^inf t^-1 e^-t dt for theta > 0.
// Series expansion for theta <= 1, continued fraction above; relative error
// at most ~1e-10 on both branches.
double exp_integral_e1(double theta);

// theta * e^theta * E1(theta), evaluated without forming e^theta (the
// continued-fraction branch cancels it analytically), so it is stable for
// arbitrarily large theta.  Limit 0 as theta -> 0+, limit 1 as theta -> inf.
double theta_exp_e1(double theta);

// I(a, b, sigma2) = integral_0^inf (sigma2*x / (a + sigma2*x))
//                   * exp(-x - b/(sigma2*x)) dx,  a >= 0, b >= 0, sigma2 > 0.
// The common kernel of the small-cell outage and intercept integrals.
// Always in [0, 1]; adaptive Gauss-Kronrod split at the interior peak scale.
double srt_integral(double a, double b, double sigma2,
                    const QuadratureSpec& spec = QuadratureSpec{});

// Root of a continuous monotone f on [lo, hi] with f(lo)*f(hi) <= 0.
// Plain bisection until the interval width falls below tol.
template <typename F>
double bisect_monotone(F&& f, double lo, double hi, double tol);

// Least-squares fit of log(probability) against log(snr), returned with the
// diversity-order sign convention d = -slope.  Requires >= 2 points with
// positive snr and probability.
double diversity_order_fit(const std::vector<std::pair<double, double>>& snr_prob_points);

// ---- implementation of the function template ----

template <typename F>
double bisect_monotone(F&& f, double lo, double hi, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("bisect_monotone: tol must be > 0");
  if (!(lo < hi)) throw std::invalid_argument("bisect_monotone: requires lo < hi");
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw bracket_error("bisect_monotone: no sign change over [lo, hi]");
  while (hi - lo > tol) {
    double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // interval at floating-point resolution
    double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

}  // namespace hetsrt
