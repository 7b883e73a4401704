// Closed-form outage and intercept probabilities for the three schemes,
// including the overall (product-of-links) metrics.  The orthogonal and
// interference-limited formulas are exact; the interference-canceled small-
// cell and wiretap formulas hold asymptotically for small 2^rate * sigma2_sm
// and are flagged as such so validation can apply the right tolerance.
#pragma once

#include "hetsrt/model.hpp"
#include "hetsrt/numerics.hpp"

#include <stdexcept>

namespace hetsrt {

enum class Exactness { exact, asymptotic };

// One operating point of the security-reliability tradeoff: per-link outage
// and intercept probabilities plus their products, with a per-component flag
// telling whether the generating formula is exact or asymptotic.
struct SrtPoint {
  double p_out_m = 0.0;
  double p_out_s = 0.0;
  double p_int_m = 0.0;
  double p_int_s = 0.0;
  double p_out_overall = 0.0;  // p_out_m * p_out_s
  double p_int_overall = 0.0;  // p_int_m * p_int_s
  Exactness out_m_kind = Exactness::exact;
  Exactness out_s_kind = Exactness::exact;
  Exactness int_m_kind = Exactness::exact;
  Exactness int_s_kind = Exactness::exact;

  bool all_exact() const {
    return out_m_kind == Exactness::exact && out_s_kind == Exactness::exact &&
           int_m_kind == Exactness::exact && int_s_kind == Exactness::exact;
  }
};

// Thrown by ic_uss_point when the jamming-direction factor Omega
// = 1 - sigma2_sm * beta * 2^(ro_m - rs_m) / sigma2_mm is not positive: the
// printed wiretap formula assumes Omega > 0, so callers should fall back to
// Monte Carlo in that regime.
class degenerate_regime_error : public std::domain_error {
 public:
  degenerate_regime_error(const std::string& what, double omega)
      : std::domain_error(what), omega_(omega) {}
  double omega() const { return omega_; }

 private:
  double omega_;
};

// Orthogonal sharing; all four components exact.  At alpha in {0, 1} the
// zero-bandwidth link has outage 1 (any positive rate is unachievable) and
// intercept 0 (1 if its redundancy is zero, since the threshold is then 0).
SrtPoint oss_point(const SystemConfig& config, const RatePair& rates);

// Interference-limited underlay; all four components exact.
SrtPoint il_uss_point(const SystemConfig& config, const RatePair& rates);

// Interference-canceled underlay.  Macro outage is exact; the other three
// components are asymptotic.  Throws degenerate_regime_error when Omega <= 0;
// a zero macro redundancy short-circuits to intercept 1.
SrtPoint ic_uss_point(const SystemConfig& config, const RatePair& rates,
                      const QuadratureSpec& quad = QuadratureSpec{});

// Just the exact macro-outage component of the interference-canceled scheme.
// Available on its own because it stays valid in regimes where the wiretap
// approximation (and hence the full ic_uss_point) refuses to evaluate.
double ic_uss_macro_outage(const SystemConfig& config, const RatePair& rates);

// Dispatch by scheme tag.
SrtPoint analytic_point(Scheme scheme, const SystemConfig& config, const RatePair& rates,
                        const QuadratureSpec& quad = QuadratureSpec{});

// True when the asymptotic interference-canceled formulas are inside their
// validity regime at this rate: 2^ro * sigma2_sm below the given bound.
bool ic_uss_asymptotics_valid(const SystemConfig& config, double ro, double bound = 0.1);

}  // namespace hetsrt
