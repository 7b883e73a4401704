// Special-function and quadrature oracles.  The expected values were frozen
// from an independent high-precision implementation (scipy.special.exp1 and
// scipy.integrate.quad with epsrel 1e-11) so any drift in the hand-rolled
// series, continued fraction, or adaptive rule is caught directly.
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hetsrt/numerics.hpp"

using namespace hetsrt;

namespace {
bool rel_close(double got, double want, double tol) {
  return std::abs(got - want) <= tol * std::abs(want);
}
}  // namespace

TEST_CASE("exponential integral matches frozen references") {
  const struct {
    double theta, want;
  } cases[] = {
      {1.0, 2.193839343955e-01},    {0.1, 1.822923958419e+00},
      {2.5, 2.491491787027e-02},    {0.01, 4.037929576538e+00},
      {5.0, 1.148295591275e-03},    {25.0, 5.348899755340e-13},
      {0.0527, 2.417937887647e+00}, {0.999, 2.197521820229e-01},
      {1.001, 2.190164225275e-01},
  };
  for (const auto& c : cases) {
    CAPTURE(c.theta);
    CHECK(rel_close(exp_integral_e1(c.theta), c.want, 1e-10));
  }
}

TEST_CASE("exponential integral obeys the classic log sandwich") {
  // 0.5 e^-t ln(1 + 2/t) < E1(t) < e^-t ln(1 + 1/t) for all t > 0.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 2.5);
  for (int i = 0; i < 1000; ++i) {
    const double t = std::pow(10.0, u(rng));
    const double v = exp_integral_e1(t);
    CAPTURE(t);
    CHECK(v > 0.5 * std::exp(-t) * std::log1p(2.0 / t));
    CHECK(v < std::exp(-t) * std::log1p(1.0 / t));
  }
}

TEST_CASE("exponential integral rejects nonpositive arguments") {
  CHECK_THROWS_AS(exp_integral_e1(0.0), std::domain_error);
  CHECK_THROWS_AS(exp_integral_e1(-1.0), std::domain_error);
}

TEST_CASE("scaled form theta e^theta E1 matches frozen references") {
  const struct {
    double theta, want;
  } cases[] = {
      {0.2, 2.986697493864e-01},  {1.0, 5.963473623232e-01},
      {4.82, 8.479374237799e-01}, {10.0, 9.156333393979e-01},
      {100.0, 9.901942286733e-01}, {599.0, 9.983360973064e-01},
  };
  for (const auto& c : cases) {
    CAPTURE(c.theta);
    CHECK(rel_close(theta_exp_e1(c.theta), c.want, 1e-10));
  }
  CHECK(theta_exp_e1(0.0) == 0.0);
}

TEST_CASE("scaled form stays in (t/(t+1), 1) and is monotone for huge arguments") {
  // The continued-fraction branch never forms e^theta, so it must stay finite
  // and ordered far beyond the overflow threshold of the naive product.
  double prev = 0.0;
  for (double t : {1e3, 1e4, 1e6, 1e9, 1e12}) {
    const double v = theta_exp_e1(t);
    CAPTURE(t);
    CHECK(std::isfinite(v));
    // The true gap above t/(t+1) is ~1/t^2, far below double resolution near
    // 1 for the largest t, so leave a few ULP of slack on the lower bound.
    CHECK(v >= t / (t + 1.0) - 1e-15);
    CHECK(v < 1.0);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("sharing integral matches frozen references") {
  const struct {
    double a, b, s2, want;
  } cases[] = {
      {0.0, 0.0, 1.0, 1.000000000000e+00},
      {0.5, 0.1, 1.0, 4.663803204888e-01},
      {2.0, 0.03, 0.5, 1.636137178367e-01},
      {0.2, 0.00632455532, 1.0, 6.922829882112e-01},
      {1.0, 0.0, 1.0, 4.036526376768e-01},
      {0.05, 2.0, 1.0, 1.355938605830e-01},
      {3.0, 0.5, 0.25, 2.094444897272e-02},
      {1e-6, 1e-8, 1.0, 9.999866295852e-01},
      {50.0, 10.0, 1.0, 4.313210732334e-04},
      {0.01, 5.0, 0.05, 1.154107383493e-08},
  };
  for (const auto& c : cases) {
    CAPTURE(c.a);
    CAPTURE(c.b);
    CHECK(rel_close(srt_integral(c.a, c.b, c.s2), c.want, 1e-7));
  }
}

TEST_CASE("sharing integral reduces to the scaled exponential integral at b = 0") {
  // I(a, 0, s2) = 1 - psi e^psi E1(psi) with psi = a / s2: two independent
  // code paths that must agree tightly.
  for (auto [a, s2] : std::vector<std::pair<double, double>>{
           {1.0, 1.0}, {0.3, 0.7}, {5.0, 2.0}, {0.02, 0.5}}) {
    const double psi = a / s2;
    CAPTURE(a);
    CHECK(rel_close(srt_integral(a, 0.0, s2), 1.0 - theta_exp_e1(psi), 1e-8));
  }
}

TEST_CASE("sharing integral is bounded and monotone in its damping parameters") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ua(0.0, 5.0), ub(0.0, 2.0), us(0.1, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double a = ua(rng), b = ub(rng), s2 = us(rng);
    const double v = srt_integral(a, b, s2);
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(s2);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    // Larger a or larger b both shrink the integrand pointwise.
    CHECK(srt_integral(a + 0.5, b, s2) <= v + 1e-12);
    CHECK(srt_integral(a, b + 0.5, s2) <= v + 1e-12);
  }
}

TEST_CASE("sharing integral rejects invalid parameters") {
  CHECK_THROWS_AS(srt_integral(-1.0, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(srt_integral(0.0, -1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(srt_integral(1.0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(srt_integral(1.0, 1.0, -2.0), std::domain_error);
}

TEST_CASE("sharing integral reports an unreachable tolerance with its best estimate") {
  QuadratureSpec strangled;
  strangled.rel_tol = 1e-15;
  strangled.abs_tol = 0.0;
  strangled.max_subdivisions = 1;
  try {
    srt_integral(0.5, 0.1, 1.0, strangled);
    FAIL("expected convergence_error");
  } catch (const convergence_error& e) {
    // The carried estimate should still be in the right neighborhood.
    CHECK(rel_close(e.estimate(), 4.663803204888e-01, 1e-2));
    CHECK(e.error_bound() > 0.0);
  }
}

TEST_CASE("bisection finds roots of monotone functions") {
  const double r = bisect_monotone([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-12);
  CHECK(rel_close(r, std::sqrt(2.0), 1e-11));
  const double d = bisect_monotone([](double x) { return 1.0 - x; }, 0.5, 3.0, 1e-12);
  CHECK(rel_close(d, 1.0, 1e-11));
}

TEST_CASE("bisection rejects brackets without a sign change") {
  CHECK_THROWS_AS(bisect_monotone([](double x) { return x + 10.0; }, 0.0, 1.0, 1e-9),
                  bracket_error);
  CHECK_THROWS_AS(bisect_monotone([](double x) { return x; }, 1.0, 1.0, 1e-9),
                  std::invalid_argument);
  CHECK_THROWS_AS(bisect_monotone([](double x) { return x; }, -1.0, 1.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("slope fit recovers an exact power law and its sign convention") {
  // P = 3.7 * snr^-2 must fit order 2 to machine precision.
  std::vector<std::pair<double, double>> pts;
  for (double snr : {1e2, 1e3, 1e4, 1e5, 1e6}) pts.push_back({snr, 3.7 / (snr * snr)});
  CHECK(rel_close(diversity_order_fit(pts), 2.0, 1e-12));

  std::vector<std::pair<double, double>> flat;
  for (double snr : {1e2, 1e3, 1e4}) flat.push_back({snr, 0.25});
  CHECK(std::abs(diversity_order_fit(flat)) < 1e-13);
}

TEST_CASE("slope fit rejects degenerate inputs") {
  CHECK_THROWS_AS(diversity_order_fit({{1.0, 0.5}}), std::domain_error);
  CHECK_THROWS_AS(diversity_order_fit({{1.0, 0.5}, {2.0, -0.1}}), std::domain_error);
  CHECK_THROWS_AS(diversity_order_fit({{0.0, 0.5}, {2.0, 0.1}}), std::domain_error);
}
