// System model: channel-variance / SNR configuration, validation (including
// the interference-cancelation feasibility condition), rate pairs, and the
// seeded exponential channel-gain sampler.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hetsrt {

enum class Scheme { oss, il_uss, ic_uss };

const char* scheme_name(Scheme s);
bool parse_scheme(const std::string& text, Scheme& out);  // "oss"/"il-uss"/"ic-uss"

// Static network parameters.  The small-cell SNR is always derived as
// gamma_s() = beta * gamma_m; it is never stored separately.
struct SystemConfig {
  // Mean channel power gains: first index transmitter (M = macro base
  // station, S = small base station), second receiver (m = macro user,
  // s = small user, e = eavesdropper).
  double sigma2_mm = 1.0;
  double sigma2_ss = 1.0;
  double sigma2_me = 1.0;
  double sigma2_se = 1.0;
  double sigma2_ms = 0.1;
  double sigma2_sm = 0.1;
  double gamma_m = 316.22776601683793;  // macro SNR, linear (default 25 dB)
  double beta = 0.5;                    // small-to-macro SNR ratio
  double alpha = 0.5;                   // orthogonal-sharing spectrum fraction

  double gamma_s() const { return beta * gamma_m; }
};

double db_to_linear(double db);
double linear_to_db(double linear);

// Overall and secrecy rates per link, bit/s/Hz.  The overall rate must not
// fall below the secrecy rate (the difference is the secrecy redundancy).
struct RatePair {
  double ro_m = 1.0;
  double ro_s = 1.0;
  double rs_m = 0.5;
  double rs_s = 0.5;
};

// One realization of the six instantaneous channel power gains.
struct ChannelDraw {
  double g_mm, g_ss, g_me, g_se, g_ms, g_sm;
};

// Returns the complete list of violated invariants (empty = valid).  The
// feasibility bound beta <= sigma2_mm / sigma2_sm is enforced only for the
// interference-canceled scheme, which needs it to null the small-cell
// interference at the macro user.
std::vector<std::string> validate(const SystemConfig& config, Scheme scheme);

// Rate sanity: nonnegative rates and nonnegative redundancy per link.
std::vector<std::string> validate(const RatePair& rates);

// Deterministic uniform stream addressed by (seed, stream).  Streams with
// distinct indices are independent for practical purposes; a given
// (seed, stream) pair always reproduces the same sequence, which is the
// basis of the bitwise-reproducible Monte Carlo contract.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream);

  // Uniform double in (0, 1]; never returns 0 so -log(u) is always finite.
  double next_unit();

 private:
  std::mt19937_64 engine_;
};

// Six independent exponential gains with means from the config, drawn by
// inverse transform g = -sigma2 * ln(U).  Field order is the draw order.
ChannelDraw sample_draw(const SystemConfig& config, StreamRng& rng);

}  // namespace hetsrt
