// Configuration validation and the seeded exponential-gain sampler.
#include "hetsrt/model.hpp"

#include <cmath>

namespace hetsrt {

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::oss: return "oss";
    case Scheme::il_uss: return "il-uss";
    case Scheme::ic_uss: return "ic-uss";
  }
  return "?";
}

bool parse_scheme(const std::string& text, Scheme& out) {
  if (text == "oss") {
    out = Scheme::oss;
  } else if (text == "il-uss" || text == "il_uss") {
    out = Scheme::il_uss;
  } else if (text == "ic-uss" || text == "ic_uss") {
    out = Scheme::ic_uss;
  } else {
    return false;
  }
  return true;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

std::vector<std::string> validate(const SystemConfig& c, Scheme scheme) {
  std::vector<std::string> errors;
  auto require_positive = [&errors](double v, const char* name) {
    if (!(v > 0.0)) errors.push_back(std::string(name) + " must be > 0");
  };
  require_positive(c.sigma2_mm, "sigma2_mm");
  require_positive(c.sigma2_ss, "sigma2_ss");
  require_positive(c.sigma2_me, "sigma2_me");
  require_positive(c.sigma2_se, "sigma2_se");
  require_positive(c.sigma2_ms, "sigma2_ms");
  require_positive(c.sigma2_sm, "sigma2_sm");
  require_positive(c.gamma_m, "gamma_m");
  if (!(c.beta >= 0.0)) errors.push_back("beta must be >= 0");
  if (!(c.alpha >= 0.0 && c.alpha <= 1.0)) errors.push_back("alpha must be in [0, 1]");
  if (scheme == Scheme::ic_uss && c.sigma2_sm > 0.0 && c.sigma2_mm > 0.0 &&
      c.beta > c.sigma2_mm / c.sigma2_sm) {
    errors.push_back(
        "interference cancelation infeasible: requires beta <= sigma2_mm/sigma2_sm "
        "(got beta = " + std::to_string(c.beta) + " > " +
        std::to_string(c.sigma2_mm / c.sigma2_sm) + ")");
  }
  return errors;
}

std::vector<std::string> validate(const RatePair& r) {
  std::vector<std::string> errors;
  if (!(r.ro_m >= 0.0)) errors.push_back("ro_m must be >= 0");
  if (!(r.ro_s >= 0.0)) errors.push_back("ro_s must be >= 0");
  if (!(r.rs_m >= 0.0)) errors.push_back("rs_m must be >= 0");
  if (!(r.rs_s >= 0.0)) errors.push_back("rs_s must be >= 0");
  if (!(r.ro_m >= r.rs_m)) errors.push_back("ro_m must be >= rs_m (nonnegative redundancy)");
  if (!(r.ro_s >= r.rs_s)) errors.push_back("ro_s must be >= rs_s (nonnegative redundancy)");
  return errors;
}

namespace {

// SplitMix64 finalizer; decorrelates consecutive (seed, stream) keys before
// they seed the main engine.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t stream)
    : engine_(mix64(mix64(seed) ^ mix64(stream ^ 0xa5a5a5a5a5a5a5a5ull))) {}

double StreamRng::next_unit() {
  // 53 uniform bits -> [0, 1), reflected to (0, 1].
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return 1.0 - u;
}

ChannelDraw sample_draw(const SystemConfig& c, StreamRng& rng) {
  ChannelDraw d;
  d.g_mm = -c.sigma2_mm * std::log(rng.next_unit());
  d.g_ss = -c.sigma2_ss * std::log(rng.next_unit());
  d.g_me = -c.sigma2_me * std::log(rng.next_unit());
  d.g_se = -c.sigma2_se * std::log(rng.next_unit());
  d.g_ms = -c.sigma2_ms * std::log(rng.next_unit());
  d.g_sm = -c.sigma2_sm * std::log(rng.next_unit());
  return d;
}

}  // namespace hetsrt
