// Per-realization link capacities for the three spectrum-sharing schemes.
// These deterministic functions of one channel draw are the ground truth the
// Monte Carlo estimator evaluates against the closed-form probabilities.
#pragma once

#include "hetsrt/model.hpp"

namespace hetsrt {

// Spectral efficiencies (bit/s/Hz) of the four links of interest: the two
// legitimate links (macro base station -> macro user, small base station ->
// small user) and the two wiretap links observed by the eavesdropper.
struct CapacitySet {
  double c_mm;  // macro cell, legitimate
  double c_ss;  // small cell, legitimate
  double c_me;  // macro signal at the eavesdropper
  double c_se;  // small signal at the eavesdropper
};

// Orthogonal sharing: the macro cell gets fraction alpha of the band, the
// small cell the rest; no cross-interference.
CapacitySet oss_capacities(const SystemConfig& config, const ChannelDraw& draw);

// Underlay sharing with mutual interference decoded as noise on every link.
CapacitySet il_uss_capacities(const SystemConfig& config, const ChannelDraw& draw);

// Underlay sharing where the macro base station spends part of its power on
// a weight-designed auxiliary signal that cancels the small-cell
// interference at the macro user and doubles as a jammer against the
// eavesdropper.  Requires beta <= sigma2_mm / sigma2_sm so the auxiliary
// power gamma_m_bar does not exceed the total budget.
CapacitySet ic_uss_capacities(const SystemConfig& config, const ChannelDraw& draw);

// Dispatch by scheme tag.
CapacitySet capacities(Scheme scheme, const SystemConfig& config, const ChannelDraw& draw);

}  // namespace hetsrt
