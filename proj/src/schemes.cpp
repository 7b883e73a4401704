// Capacity formulas for the three sharing schemes.
#include "hetsrt/schemes.hpp"

#include <cmath>
#include <stdexcept>

namespace hetsrt {

CapacitySet oss_capacities(const SystemConfig& c, const ChannelDraw& d) {
  const double a = c.alpha;
  const double gm = c.gamma_m;
  const double gs = c.gamma_s();
  return {
      a * std::log2(1.0 + gm * d.g_mm),
      (1.0 - a) * std::log2(1.0 + gs * d.g_ss),
      a * std::log2(1.0 + gm * d.g_me),
      (1.0 - a) * std::log2(1.0 + gs * d.g_se),
  };
}

CapacitySet il_uss_capacities(const SystemConfig& c, const ChannelDraw& d) {
  const double gm = c.gamma_m;
  const double gs = c.gamma_s();
  return {
      std::log2(1.0 + gm * d.g_mm / (gs * d.g_sm + 1.0)),
      std::log2(1.0 + gs * d.g_ss / (gm * d.g_ms + 1.0)),
      std::log2(1.0 + gm * d.g_me / (gs * d.g_se + 1.0)),
      std::log2(1.0 + gs * d.g_se / (gm * d.g_me + 1.0)),
  };
}

CapacitySet ic_uss_capacities(const SystemConfig& c, const ChannelDraw& d) {
  const double gm = c.gamma_m;
  const double gs = c.gamma_s();
  // Average power of the cancelation signal; the remainder gm - gbar drives
  // the information signal.  Feasibility (beta <= sigma2_mm/sigma2_sm) makes
  // the remainder nonnegative.
  const double gbar = c.beta * gm * c.sigma2_sm / c.sigma2_mm;
  if (gm - gbar < 0.0)
    throw std::domain_error(
        "ic_uss_capacities: infeasible config (beta > sigma2_mm/sigma2_sm)");
  // Instantaneous power of the cancelation signal for this draw.
  const double gm_inst = gs * d.g_sm / c.sigma2_mm;
  const double small_rx = d.g_ss * d.g_mm * gs / c.sigma2_mm;
  const double small_at_e = d.g_se * d.g_mm * gs / c.sigma2_mm;
  return {
      std::log2(1.0 + (gm - gbar) * d.g_mm),
      std::log2(1.0 + small_rx / (d.g_ms * (gm - gbar + gm_inst) + 1.0)),
      std::log2(1.0 + d.g_me * (gm - gbar) / (d.g_me * gm_inst + small_at_e + 1.0)),
      std::log2(1.0 + small_at_e / (d.g_me * (gm - gbar + gm_inst) + 1.0)),
  };
}

CapacitySet capacities(Scheme scheme, const SystemConfig& c, const ChannelDraw& d) {
  switch (scheme) {
    case Scheme::oss: return oss_capacities(c, d);
    case Scheme::il_uss: return il_uss_capacities(c, d);
    case Scheme::ic_uss: return ic_uss_capacities(c, d);
  }
  throw std::logic_error("capacities: unknown scheme");
}

}  // namespace hetsrt
