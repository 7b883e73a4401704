// Monte Carlo estimator: bitwise reproducibility (including across worker
// counts and threshold orderings), statistical agreement with the exact
// formulas, the two-stream independence structure, and edge semantics.
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "hetsrt/analytic.hpp"
#include "hetsrt/montecarlo.hpp"

using namespace hetsrt;

namespace {
// Standard error a binomial estimate would have if the true value were p.
double binom_se(double p, double n) { return std::sqrt(std::max(p * (1.0 - p), 0.0) / n); }
}  // namespace

TEST_CASE("same seed reproduces identical estimates") {
  SystemConfig c;
  const RatePair r{1.0, 1.0, 0.5, 0.5};
  const McPoint a = estimate_point(c, r, Scheme::il_uss, 50000, 99);
  const McPoint b = estimate_point(c, r, Scheme::il_uss, 50000, 99);
  CHECK(a.p_out_m.count == b.p_out_m.count);
  CHECK(a.p_int_s.count == b.p_int_s.count);
  CHECK(a.p_out_overall.value == b.p_out_overall.value);
  const McPoint d = estimate_point(c, r, Scheme::il_uss, 50000, 100);
  CHECK(a.p_out_m.count != d.p_out_m.count);  // the seed actually matters
}

TEST_CASE("worker count never changes the result") {
  SystemConfig c;
  const RatePair r{1.2, 0.9, 0.4, 0.3};
  for (Scheme s : {Scheme::oss, Scheme::il_uss, Scheme::ic_uss}) {
    // 300000 trials span several chunks, so scheduling differences would show.
    const McPoint w1 = estimate_point(c, r, s, 300000, 7, 1);
    const McPoint w3 = estimate_point(c, r, s, 300000, 7, 3);
    CAPTURE(scheme_name(s));
    CHECK(w1.p_out_m.count == w3.p_out_m.count);
    CHECK(w1.p_out_s.count == w3.p_out_s.count);
    CHECK(w1.p_int_m.count == w3.p_int_m.count);
    CHECK(w1.p_int_s.count == w3.p_int_s.count);
    CHECK(w1.p_out_overall.count == w3.p_out_overall.count);
    CHECK(w1.p_int_overall.count == w3.p_int_overall.count);
    CHECK(w1.p_out_joint.count == w3.p_out_joint.count);
    CHECK(w1.p_int_joint.count == w3.p_int_joint.count);
  }
}

TEST_CASE("curve entries share the draws with single-point runs") {
  // Common-random-number contract: evaluating several thresholds in one pass
  // must give exactly what a dedicated run at each threshold gives.
  SystemConfig c;
  const std::vector<RatePair> rates = {
      {0.8, 0.8, 0.3, 0.3}, {1.5, 1.5, 0.3, 0.3}, {2.5, 2.5, 0.3, 0.3}};
  const auto curve = estimate_curve(c, rates, Scheme::il_uss, 120000, 4242);
  REQUIRE(curve.size() == 3);
  for (std::size_t i = 0; i < rates.size(); ++i) {
    const McPoint solo = estimate_point(c, rates[i], Scheme::il_uss, 120000, 4242);
    CAPTURE(i);
    CHECK(curve[i].p_out_m.count == solo.p_out_m.count);
    CHECK(curve[i].p_int_s.count == solo.p_int_s.count);
    CHECK(curve[i].p_out_overall.count == solo.p_out_overall.count);
    CHECK(curve[i].p_int_joint.count == solo.p_int_joint.count);
  }
}

TEST_CASE("threshold ordering never changes per-rate results") {
  // Ascending lists ride a sort-once histogram fast path; shuffled lists take
  // the direct path.  Both must agree bitwise.
  SystemConfig c;
  const std::vector<RatePair> ascending = {
      {0.7, 0.7, 0.2, 0.2}, {1.1, 1.1, 0.2, 0.2}, {1.9, 1.9, 0.2, 0.2}, {3.0, 3.0, 0.2, 0.2}};
  const std::vector<RatePair> shuffled = {ascending[2], ascending[0], ascending[3],
                                          ascending[1]};
  for (Scheme s : {Scheme::oss, Scheme::ic_uss}) {
    const auto fast = estimate_curve(c, ascending, s, 100000, 11);
    const auto direct = estimate_curve(c, shuffled, s, 100000, 11);
    const std::size_t remap[] = {2, 0, 3, 1};
    for (std::size_t j = 0; j < shuffled.size(); ++j) {
      CAPTURE(scheme_name(s));
      CAPTURE(j);
      CHECK(direct[j].p_out_m.count == fast[remap[j]].p_out_m.count);
      CHECK(direct[j].p_out_s.count == fast[remap[j]].p_out_s.count);
      CHECK(direct[j].p_int_m.count == fast[remap[j]].p_int_m.count);
      CHECK(direct[j].p_int_s.count == fast[remap[j]].p_int_s.count);
      CHECK(direct[j].p_out_overall.count == fast[remap[j]].p_out_overall.count);
      CHECK(direct[j].p_int_overall.count == fast[remap[j]].p_int_overall.count);
    }
  }
}

TEST_CASE("estimates cover the exact values across randomized configurations") {
  // 100 random valid configurations; with exact formulas available for the
  // orthogonal scheme, at least 99 runs must land every component within
  // four standard errors.  (At this confidence a correct estimator fails the
  // whole test with probability far below 1e-6.)
  std::mt19937_64 rng(2024);
  auto unif = [&](double lo, double hi) {
    return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  };
  const std::uint64_t n = 100000;
  int runs_ok = 0;
  for (int k = 0; k < 100; ++k) {
    SystemConfig c;
    c.sigma2_mm = std::exp(unif(std::log(0.3), std::log(2.0)));
    c.sigma2_ss = std::exp(unif(std::log(0.3), std::log(2.0)));
    c.sigma2_me = std::exp(unif(std::log(0.3), std::log(2.0)));
    c.sigma2_se = std::exp(unif(std::log(0.3), std::log(2.0)));
    c.sigma2_ms = std::exp(unif(std::log(0.02), std::log(0.3)));
    c.sigma2_sm = std::exp(unif(std::log(0.02), std::log(0.3)));
    c.gamma_m = db_to_linear(unif(8.0, 28.0));
    c.beta = unif(0.1, 1.5);
    c.alpha = unif(0.25, 0.75);
    RatePair r;
    r.rs_m = unif(0.1, 0.8);
    r.rs_s = unif(0.1, 0.8);
    r.ro_m = r.rs_m + unif(0.2, 1.8);
    r.ro_s = r.rs_s + unif(0.2, 1.8);

    const SrtPoint f = oss_point(c, r);
    const McPoint mc = estimate_point(c, r, Scheme::oss, n, 5000 + k);
    const double nn = static_cast<double>(n);
    const bool ok = std::abs(mc.p_out_m.value - f.p_out_m) <= 4.0 * binom_se(f.p_out_m, nn) &&
                    std::abs(mc.p_out_s.value - f.p_out_s) <= 4.0 * binom_se(f.p_out_s, nn) &&
                    std::abs(mc.p_int_m.value - f.p_int_m) <= 4.0 * binom_se(f.p_int_m, nn) &&
                    std::abs(mc.p_int_s.value - f.p_int_s) <= 4.0 * binom_se(f.p_int_s, nn) &&
                    std::abs(mc.p_out_overall.value - f.p_out_overall) <=
                        4.0 * binom_se(f.p_out_overall, nn) &&
                    std::abs(mc.p_int_overall.value - f.p_int_overall) <=
                        4.0 * binom_se(f.p_int_overall, nn);
    runs_ok += ok ? 1 : 0;
  }
  CHECK(runs_ok >= 99);
}

TEST_CASE("overall events are conjunctions of the per-link events") {
  SystemConfig c;
  const RatePair r{1.5, 1.5, 0.5, 0.5};
  const McPoint mc = estimate_point(c, r, Scheme::il_uss, 200000, 31);
  // Exact integer bounds for an AND of two events over the same trials.
  CHECK(mc.p_out_overall.count <= mc.p_out_m.count);
  CHECK(mc.p_out_overall.count <= mc.p_out_s.count);
  CHECK(mc.p_out_m.count + mc.p_out_s.count <=
        mc.p_out_overall.count + mc.p_out_overall.trials);
  CHECK(mc.p_int_overall.count <= mc.p_int_m.count);
  CHECK(mc.p_int_overall.count <= mc.p_int_s.count);
  // The two links live on independent streams, so the conjunction estimates
  // the product of the marginals; allow four standard errors.
  const double n = static_cast<double>(mc.p_out_overall.trials);
  const double want_out = mc.p_out_m.value * mc.p_out_s.value;
  CHECK(std::abs(mc.p_out_overall.value - want_out) <= 4.0 * binom_se(want_out, n));
  const double want_int = mc.p_int_m.value * mc.p_int_s.value;
  CHECK(std::abs(mc.p_int_overall.value - want_int) <= 4.0 * binom_se(want_int, n));
}

TEST_CASE("joint diagnostics respect the Frechet bounds") {
  SystemConfig c;
  const RatePair r{1.5, 1.5, 0.5, 0.5};
  const McPoint mc = estimate_point(c, r, Scheme::il_uss, 200000, 32);
  const double n = static_cast<double>(mc.p_out_joint.trials);
  const double slack = 4.0 / std::sqrt(n);
  CHECK(mc.p_out_joint.value <= std::min(mc.p_out_m.value, mc.p_out_s.value) + slack);
  CHECK(mc.p_out_joint.value >=
        std::max(0.0, mc.p_out_m.value + mc.p_out_s.value - 1.0) - slack);
  CHECK(mc.p_int_joint.value <= std::min(mc.p_int_m.value, mc.p_int_s.value) + slack);
}

TEST_CASE("zero rate and zero redundancy resolve ties away from the event") {
  // Capacities are nonnegative, so outage Pr(C < 0) must count exactly zero;
  // with zero redundancy the intercept threshold is 0 and the strictly
  // positive wiretap capacity makes intercept certain.
  SystemConfig c;
  const McPoint mc = estimate_point(c, {0.0, 0.0, 0.0, 0.0}, Scheme::oss, 20000, 8);
  CHECK(mc.p_out_m.count == 0);
  CHECK(mc.p_out_s.count == 0);
  CHECK(mc.p_int_m.count == mc.p_int_m.trials);
  CHECK(mc.p_int_s.count == mc.p_int_s.trials);
}

TEST_CASE("estimator metadata reports trials, seed, and exact counts") {
  SystemConfig c;
  const McPoint mc = estimate_point(c, {1.0, 1.0, 0.5, 0.5}, Scheme::oss, 12345, 77);
  CHECK(mc.p_out_m.trials == 12345);
  CHECK(mc.p_out_m.seed == 77);
  CHECK(mc.p_out_m.value ==
        static_cast<double>(mc.p_out_m.count) / static_cast<double>(mc.p_out_m.trials));
  const double se = binom_se(mc.p_out_m.value, static_cast<double>(mc.p_out_m.trials));
  CHECK(mc.p_out_m.std_error == doctest::Approx(se).epsilon(1e-12));
}

TEST_CASE("degenerate requests are rejected") {
  SystemConfig c;
  CHECK_THROWS_AS(estimate_curve(c, {}, Scheme::oss, 1000, 1), std::domain_error);
  CHECK_THROWS_AS(estimate_point(c, {1.0, 1.0, 0.5, 0.5}, Scheme::oss, 0, 1),
                  std::domain_error);
  SystemConfig bad;
  bad.sigma2_mm = -1.0;
  CHECK_THROWS_AS(estimate_point(bad, {1.0, 1.0, 0.5, 0.5}, Scheme::oss, 1000, 1),
                  std::invalid_argument);
  RatePair bad_rates{0.5, 1.0, 0.8, 0.5};
  CHECK_THROWS_AS(estimate_point(c, bad_rates, Scheme::oss, 1000, 1),
                  std::invalid_argument);
}
