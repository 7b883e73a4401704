// Figure-reproduction sweeps: security-reliability tradeoff curves, the
// rate-minimized intercept+outage sum versus SNR, constrained outage versus
// SNR, finite-SNR versus asymptotic outage, and the diversity-order table.
// Each sweep carries analytic and Monte Carlo values side by side and is
// emitted as CSV with `#`-prefixed metadata lines.
#pragma once

#include "hetsrt/asymptotics.hpp"
#include "hetsrt/model.hpp"
#include "hetsrt/montecarlo.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hetsrt {

// Tabular outcome of one sweep.  Rows are plain doubles plus a scheme tag;
// the tag becomes the leading CSV column.
struct SweepResult {
  std::string id;
  std::vector<std::string> value_columns;
  struct Row {
    Scheme scheme;
    std::vector<double> values;
  };
  std::vector<Row> rows;
  std::vector<std::pair<std::string, std::string>> metadata;  // ordered
};

// Search controls for the rate minimization of the intercept+outage sum.
struct IopSearch {
  double step = 0.02;      // coarse grid step, bit/s/Hz
  double rate_max = 5.0;   // upper end of the search range
};

// n log-spaced values covering [lo, hi], endpoints exact.
std::vector<double> log_spaced(double lo, double hi, std::size_t n);

// Arithmetic SNR grid in dB.
std::vector<double> db_grid(double lo_db, double hi_db, double step_db);

// Tradeoff curve: sweeps the common overall rate over rate_grid with both
// secrecy rates = rs, reporting overall intercept and outage, formula and
// Monte Carlo (common random numbers across the grid).  A validity flag
// marks rows where the interference-canceled formulas leave their
// small-2^rate*sigma2_sm regime (or refuse the point outright); Monte Carlo
// is the primary value there.
SweepResult srt_curve(const SystemConfig& config, double rs, Scheme scheme,
                      const std::vector<double>& rate_grid, std::uint64_t trials,
                      std::uint64_t seed);

// Per grid SNR, minimizes intercept+outage over the common rate in
// [rs, rate_max]: once on the formula objective (coarse grid plus
// golden-section refinement, with a grid-neighbor local-minimum
// certificate), and once on the Monte Carlo objective evaluated with common
// random numbers on the coarse grid.
SweepResult iop_vs_snr(const SystemConfig& config, double rs, Scheme scheme,
                       const std::vector<double>& snr_grid_db, const IopSearch& search,
                       std::uint64_t trials, std::uint64_t seed);

// Per grid SNR, solves both links' rates for the per-link intercept
// constraint and reports the overall outage, formula and Monte Carlo.
SweepResult outage_vs_snr(const SystemConfig& config, double rs, Scheme scheme,
                          const std::vector<double>& snr_grid_db, double p_int_constraint,
                          std::uint64_t trials, std::uint64_t seed);

// Finite-SNR formula outage versus its high-SNR limit at constrained rates,
// for all three schemes, with the relative gap per row.
SweepResult exact_vs_asymptotic(const SystemConfig& config, double rs,
                                const std::vector<double>& snr_grid_db,
                                double p_int_constraint);

// Constrained-outage table over the grid plus the fitted diversity order
// per scheme (repeated per row; also in the metadata).
SweepResult diversity_sweep(const SystemConfig& config, double p_int_constraint,
                            const std::vector<double>& snr_grid_db, double rs,
                            std::uint64_t fallback_trials, std::uint64_t fallback_seed);

// Concatenates per-scheme sweeps with identical columns into one table.
SweepResult merge_sweeps(const std::vector<SweepResult>& parts);

// CSV emission: metadata as '# key: value' lines, then a header row, then
// one data row per grid point.  Probabilities below 1e-3 are printed in
// scientific notation; output is byte-deterministic for identical inputs.
void write_csv(const SweepResult& result, std::ostream& out);
std::string format_csv_value(double v);

}  // namespace hetsrt
