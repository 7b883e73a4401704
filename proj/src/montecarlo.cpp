// Chunked, stream-seeded Monte Carlo estimation.  Trials are partitioned
// into fixed-size chunks; each chunk owns two pre-seeded uniform streams
// (one per cell), so event counts are exact integers whose totals do not
// depend on how chunks are scheduled across workers.
#include "hetsrt/montecarlo.hpp"

#include "hetsrt/schemes.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hetsrt {

namespace {

constexpr std::uint64_t kChunkSize = 1u << 16;
// Stream keys: chunk index offset by a per-cell base so the macro and small
// streams never collide.
constexpr std::uint64_t kMacroStreamBase = 0;
constexpr std::uint64_t kSmallStreamBase = 1ull << 40;

// Eight event families tracked per rate point.
enum EventKind {
  kOutM = 0, kOutS, kIntM, kIntS, kOutAll, kIntAll, kOutJoint, kIntJoint,
  kEventKinds
};

struct Counts {
  std::vector<std::uint64_t> c[kEventKinds];
  explicit Counts(std::size_t n_rates) {
    for (auto& v : c) v.assign(n_rates, 0);
  }
  void add(const Counts& other) {
    for (int k = 0; k < kEventKinds; ++k)
      for (std::size_t j = 0; j < c[k].size(); ++j) c[k][j] += other.c[k][j];
  }
};

struct Thresholds {
  std::vector<double> out_m, out_s, int_m, int_s;  // per rate point
  bool ascending = false;
};

Thresholds make_thresholds(const std::vector<RatePair>& rates) {
  Thresholds t;
  t.out_m.reserve(rates.size());
  for (const auto& r : rates) {
    t.out_m.push_back(r.ro_m);
    t.out_s.push_back(r.ro_s);
    t.int_m.push_back(r.ro_m - r.rs_m);
    t.int_s.push_back(r.ro_s - r.rs_s);
  }
  auto asc = [](const std::vector<double>& v) {
    return std::is_sorted(v.begin(), v.end());
  };
  t.ascending = asc(t.out_m) && asc(t.out_s) && asc(t.int_m) && asc(t.int_s);
  return t;
}

// Index of the first threshold strictly above c: outage events (cap < rate)
// hold for every rate point at or past this index when thresholds ascend.
std::size_t first_above(const std::vector<double>& t, double c) {
  return static_cast<std::size_t>(std::upper_bound(t.begin(), t.end(), c) - t.begin());
}

// Index of the first threshold at or above c: intercept events (cap >
// threshold, strictly) hold for every rate point before this index.
std::size_t first_at_or_above(const std::vector<double>& t, double c) {
  return static_cast<std::size_t>(std::lower_bound(t.begin(), t.end(), c) - t.begin());
}

// Histogram layout for the ascending fast path: outage-family events are
// recorded at their first-true index (prefix sums recover per-rate counts),
// intercept-family events at their first-false index (suffix sums).
struct ChunkHist {
  std::vector<std::uint64_t> h[kEventKinds];
  explicit ChunkHist(std::size_t n_rates) {
    for (auto& v : h) v.assign(n_rates + 1, 0);
  }
};

void process_chunk_ascending(const SystemConfig& cfg, Scheme scheme, const Thresholds& t,
                             std::uint64_t chunk, std::uint64_t n_trials,
                             std::uint64_t seed, ChunkHist& hist) {
  StreamRng rng_a(seed, kMacroStreamBase + chunk);
  StreamRng rng_b(seed, kSmallStreamBase + chunk);
  for (std::uint64_t i = 0; i < n_trials; ++i) {
    const ChannelDraw da = sample_draw(cfg, rng_a);
    const ChannelDraw db = sample_draw(cfg, rng_b);
    const CapacitySet ca = capacities(scheme, cfg, da);
    const CapacitySet cb = capacities(scheme, cfg, db);
    const std::size_t iom = first_above(t.out_m, ca.c_mm);
    const std::size_t ios = first_above(t.out_s, cb.c_ss);
    const std::size_t iim = first_at_or_above(t.int_m, ca.c_me);
    const std::size_t iis = first_at_or_above(t.int_s, cb.c_se);
    ++hist.h[kOutM][iom];
    ++hist.h[kOutS][ios];
    ++hist.h[kIntM][iim];
    ++hist.h[kIntS][iis];
    ++hist.h[kOutAll][std::max(iom, ios)];
    ++hist.h[kIntAll][std::min(iim, iis)];
    // Joint diagnostics: both links' events on the macro stream's draw.
    const std::size_t jos = first_above(t.out_s, ca.c_ss);
    const std::size_t jis = first_at_or_above(t.int_s, ca.c_se);
    ++hist.h[kOutJoint][std::max(iom, jos)];
    ++hist.h[kIntJoint][std::min(iim, jis)];
  }
}

void hist_to_counts(const ChunkHist& hist, Counts& counts) {
  const std::size_t n = counts.c[0].size();
  for (int k = 0; k < kEventKinds; ++k) {
    const bool outage_family = (k == kOutM || k == kOutS || k == kOutAll || k == kOutJoint);
    if (outage_family) {
      std::uint64_t running = 0;
      for (std::size_t j = 0; j < n; ++j) {
        running += hist.h[k][j];
        counts.c[k][j] += running;
      }
    } else {
      std::uint64_t running = 0;
      for (std::size_t j = n; j-- > 0;) {
        running += hist.h[k][j + 1];
        counts.c[k][j] += running;
      }
    }
  }
}

void process_chunk_direct(const SystemConfig& cfg, Scheme scheme, const Thresholds& t,
                          std::uint64_t chunk, std::uint64_t n_trials,
                          std::uint64_t seed, Counts& counts) {
  StreamRng rng_a(seed, kMacroStreamBase + chunk);
  StreamRng rng_b(seed, kSmallStreamBase + chunk);
  const std::size_t n = t.out_m.size();
  for (std::uint64_t i = 0; i < n_trials; ++i) {
    const ChannelDraw da = sample_draw(cfg, rng_a);
    const ChannelDraw db = sample_draw(cfg, rng_b);
    const CapacitySet ca = capacities(scheme, cfg, da);
    const CapacitySet cb = capacities(scheme, cfg, db);
    for (std::size_t j = 0; j < n; ++j) {
      const bool om = ca.c_mm < t.out_m[j];
      const bool os = cb.c_ss < t.out_s[j];
      const bool im = ca.c_me > t.int_m[j];
      const bool is = cb.c_se > t.int_s[j];
      counts.c[kOutM][j] += om;
      counts.c[kOutS][j] += os;
      counts.c[kIntM][j] += im;
      counts.c[kIntS][j] += is;
      counts.c[kOutAll][j] += om && os;
      counts.c[kIntAll][j] += im && is;
      counts.c[kOutJoint][j] += om && (ca.c_ss < t.out_s[j]);
      counts.c[kIntJoint][j] += im && (ca.c_se > t.int_s[j]);
    }
  }
}

ProbEstimate make_estimate(std::uint64_t count, std::uint64_t trials, std::uint64_t seed) {
  ProbEstimate e;
  e.count = count;
  e.trials = trials;
  e.seed = seed;
  e.value = static_cast<double>(count) / static_cast<double>(trials);
  e.std_error = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(trials));
  return e;
}

unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

}  // namespace

std::vector<McPoint> estimate_curve(const SystemConfig& cfg, const std::vector<RatePair>& rates,
                                    Scheme scheme, std::uint64_t trials, std::uint64_t seed,
                                    unsigned workers) {
  if (rates.empty())
    throw std::domain_error("estimate_curve: rates list must be nonempty");
  if (trials == 0)
    throw std::domain_error("estimate_curve: trials must be >= 1");
  {
    auto errors = validate(cfg, scheme);
    for (const auto& r : rates) {
      auto re = validate(r);
      errors.insert(errors.end(), re.begin(), re.end());
      if (!errors.empty()) break;
    }
    if (!errors.empty()) {
      std::ostringstream msg;
      msg << "estimate_curve: invalid inputs:";
      for (const auto& e : errors) msg << ' ' << e << ';';
      throw std::invalid_argument(msg.str());
    }
  }

  const Thresholds thresholds = make_thresholds(rates);
  const std::size_t n_rates = rates.size();
  const std::uint64_t n_chunks = (trials + kChunkSize - 1) / kChunkSize;
  const unsigned n_workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(workers), n_chunks));

  auto run_range = [&](Counts& counts, std::atomic<std::uint64_t>& next) {
    for (std::uint64_t chunk = next.fetch_add(1); chunk < n_chunks;
         chunk = next.fetch_add(1)) {
      const std::uint64_t lo = chunk * kChunkSize;
      const std::uint64_t n_trials = std::min<std::uint64_t>(kChunkSize, trials - lo);
      if (thresholds.ascending) {
        ChunkHist hist(n_rates);
        process_chunk_ascending(cfg, scheme, thresholds, chunk, n_trials, seed, hist);
        hist_to_counts(hist, counts);
      } else {
        process_chunk_direct(cfg, scheme, thresholds, chunk, n_trials, seed, counts);
      }
    }
  };

  Counts total(n_rates);
  std::atomic<std::uint64_t> next{0};
  if (n_workers <= 1) {
    run_range(total, next);
  } else {
    std::vector<Counts> partial(n_workers, Counts(n_rates));
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w)
      pool.emplace_back([&, w] { run_range(partial[w], next); });
    for (auto& th : pool) th.join();
    for (const auto& p : partial) total.add(p);  // integer sums: order-independent
  }

  std::vector<McPoint> out(n_rates);
  for (std::size_t j = 0; j < n_rates; ++j) {
    out[j].p_out_m = make_estimate(total.c[kOutM][j], trials, seed);
    out[j].p_out_s = make_estimate(total.c[kOutS][j], trials, seed);
    out[j].p_int_m = make_estimate(total.c[kIntM][j], trials, seed);
    out[j].p_int_s = make_estimate(total.c[kIntS][j], trials, seed);
    out[j].p_out_overall = make_estimate(total.c[kOutAll][j], trials, seed);
    out[j].p_int_overall = make_estimate(total.c[kIntAll][j], trials, seed);
    out[j].p_out_joint = make_estimate(total.c[kOutJoint][j], trials, seed);
    out[j].p_int_joint = make_estimate(total.c[kIntJoint][j], trials, seed);
  }
  return out;
}

McPoint estimate_point(const SystemConfig& cfg, const RatePair& rates, Scheme scheme,
                       std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  return estimate_curve(cfg, {rates}, scheme, trials, seed, workers).front();
}

}  // namespace hetsrt
