// Sweep assembly and CSV emission for the five result figures.
#include "hetsrt/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hetsrt {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt_double(double v) { return format_csv_value(v); }

void append_config_metadata(SweepResult& r, const SystemConfig& c) {
  r.metadata.emplace_back("sigma2_mm", fmt_double(c.sigma2_mm));
  r.metadata.emplace_back("sigma2_ss", fmt_double(c.sigma2_ss));
  r.metadata.emplace_back("sigma2_me", fmt_double(c.sigma2_me));
  r.metadata.emplace_back("sigma2_se", fmt_double(c.sigma2_se));
  r.metadata.emplace_back("sigma2_ms", fmt_double(c.sigma2_ms));
  r.metadata.emplace_back("sigma2_sm", fmt_double(c.sigma2_sm));
  r.metadata.emplace_back("gamma_m_db", fmt_double(linear_to_db(c.gamma_m)));
  r.metadata.emplace_back("beta", fmt_double(c.beta));
  r.metadata.emplace_back("alpha", fmt_double(c.alpha));
}

// Formula evaluation that degrades to "absent" instead of throwing when the
// closed form refuses the regime (degenerate wiretap factor or quadrature
// convergence); Monte Carlo stays primary in those rows.
bool try_formula(Scheme scheme, const SystemConfig& c, const RatePair& rates,
                 SrtPoint& out) {
  try {
    out = analytic_point(scheme, c, rates);
    return true;
  } catch (const degenerate_regime_error&) {
    return false;
  } catch (const convergence_error&) {
    return false;
  }
}

RatePair constrained_rates(Scheme scheme, const SystemConfig& c, double rs, double p_int) {
  switch (scheme) {
    case Scheme::oss:
      return oss_rates_for_intercept(c, rs, rs, p_int, p_int);
    case Scheme::il_uss:
      return il_uss_rates_for_intercept(c, rs, rs, p_int, p_int);
    case Scheme::ic_uss: {
      RatePair r;
      r.rs_m = r.rs_s = rs;
      r.ro_m = ic_uss_solve_rate_macro(c, rs, p_int);
      r.ro_s = ic_uss_solve_rate_small(c, rs, p_int);
      return r;
    }
  }
  throw std::logic_error("constrained_rates: unknown scheme");
}

}  // namespace

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  if (n == 0) throw std::invalid_argument("log_spaced: n must be >= 1");
  if (!(lo > 0.0 && hi >= lo)) throw std::invalid_argument("log_spaced: need 0 < lo <= hi");
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  const double llo = std::log(lo), lhi = std::log(hi);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(n - 1));
  v.front() = lo;
  v.back() = hi;
  return v;
}

std::vector<double> db_grid(double lo_db, double hi_db, double step_db) {
  if (!(step_db > 0.0)) throw std::invalid_argument("db_grid: step must be > 0");
  if (!(hi_db >= lo_db)) throw std::invalid_argument("db_grid: need hi >= lo");
  std::vector<double> v;
  for (double x = lo_db; x <= hi_db + 1e-9; x += step_db) v.push_back(x);
  return v;
}

SweepResult srt_curve(const SystemConfig& config, double rs, Scheme scheme,
                      const std::vector<double>& rate_grid, std::uint64_t trials,
                      std::uint64_t seed) {
  if (rate_grid.empty()) throw std::invalid_argument("srt_curve: empty rate grid");
  std::vector<RatePair> rates;
  rates.reserve(rate_grid.size());
  for (double r : rate_grid) rates.push_back({r, r, rs, rs});

  const std::vector<McPoint> mc = estimate_curve(config, rates, scheme, trials, seed);

  SweepResult result;
  result.id = "srt-curve";
  result.value_columns = {"rs",           "r_o",         "p_int_formula", "p_out_formula",
                          "formula_valid", "p_int_mc",    "p_int_mc_se",   "p_out_mc",
                          "p_out_mc_se"};
  result.metadata.emplace_back("experiment", result.id);
  result.metadata.emplace_back("scheme", scheme_name(scheme));
  result.metadata.emplace_back("rs", fmt_double(rs));
  result.metadata.emplace_back("trials", std::to_string(trials));
  result.metadata.emplace_back("seed", std::to_string(seed));
  append_config_metadata(result, config);

  for (std::size_t i = 0; i < rate_grid.size(); ++i) {
    SrtPoint f;
    const bool ok = try_formula(scheme, config, rates[i], f);
    const bool valid =
        ok && (scheme != Scheme::ic_uss || ic_uss_asymptotics_valid(config, rate_grid[i]));
    result.rows.push_back(
        {scheme,
         {rs, rate_grid[i], ok ? f.p_int_overall : kNan, ok ? f.p_out_overall : kNan,
          valid ? 1.0 : 0.0, mc[i].p_int_overall.value, mc[i].p_int_overall.std_error,
          mc[i].p_out_overall.value, mc[i].p_out_overall.std_error}});
  }
  return result;
}

SweepResult iop_vs_snr(const SystemConfig& config, double rs, Scheme scheme,
                       const std::vector<double>& snr_grid_db, const IopSearch& search,
                       std::uint64_t trials, std::uint64_t seed) {
  if (snr_grid_db.empty()) throw std::invalid_argument("iop_vs_snr: empty SNR grid");
  if (!(search.step > 0.0) || !(search.rate_max > rs))
    throw std::invalid_argument("iop_vs_snr: search step must be > 0 and rate_max > rs");

  // Indexed construction keeps the grid inside [rs, rate_max] exactly; a
  // running sum would drift past the upper end by float dust.
  std::vector<double> rate_grid;
  const auto n_steps = static_cast<std::size_t>(
      std::floor((search.rate_max - rs) / search.step + 1e-9));
  for (std::size_t j = 0; j <= n_steps; ++j)
    rate_grid.push_back(rs + static_cast<double>(j) * search.step);
  if (rate_grid.back() > search.rate_max)
    rate_grid.back() = search.rate_max;
  else if (rate_grid.back() < search.rate_max - 1e-12)
    rate_grid.push_back(search.rate_max);

  SweepResult result;
  result.id = "iop-vs-snr";
  result.value_columns = {"gamma_m_db", "rate_opt_formula", "iop_formula", "certified",
                          "rate_opt_mc", "iop_mc", "iop_mc_se"};
  result.metadata.emplace_back("experiment", result.id);
  result.metadata.emplace_back("scheme", scheme_name(scheme));
  result.metadata.emplace_back("rs", fmt_double(rs));
  result.metadata.emplace_back("rate_step", fmt_double(search.step));
  result.metadata.emplace_back("rate_max", fmt_double(search.rate_max));
  result.metadata.emplace_back("trials", std::to_string(trials));
  result.metadata.emplace_back("seed", std::to_string(seed));
  append_config_metadata(result, config);

  for (double db : snr_grid_db) {
    SystemConfig cg = config;
    cg.gamma_m = db_to_linear(db);

    auto objective = [&](double r) -> double {
      SrtPoint p;
      if (!try_formula(scheme, cg, {r, r, rs, rs}, p)) return kInf;
      return p.p_int_overall + p.p_out_overall;
    };

    // Coarse scan, then golden-section refinement on the bracketing cell.
    std::size_t best = 0;
    double best_val = kInf;
    std::vector<double> grid_vals(rate_grid.size());
    for (std::size_t j = 0; j < rate_grid.size(); ++j) {
      grid_vals[j] = objective(rate_grid[j]);
      if (grid_vals[j] < best_val) {
        best_val = grid_vals[j];
        best = j;
      }
    }
    if (!std::isfinite(best_val))
      throw convergence_error("iop_vs_snr: formula objective undefined on entire grid",
                              kNan, kNan);
    double a = rate_grid[best > 0 ? best - 1 : best];
    double b = rate_grid[best + 1 < rate_grid.size() ? best + 1 : best];
    constexpr double kGolden = 0.61803398874989484820;
    double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
    double f1 = objective(x1), f2 = objective(x2);
    while (b - a > 1e-9) {
      if (f1 < f2) {
        b = x2; x2 = x1; f2 = f1;
        x1 = b - kGolden * (b - a);
        f1 = objective(x1);
      } else {
        a = x1; x1 = x2; f1 = f2;
        x2 = a + kGolden * (b - a);
        f2 = objective(x2);
      }
    }
    double rate_opt = 0.5 * (a + b);
    double iop_opt = objective(rate_opt);
    if (!(iop_opt <= best_val)) {  // refinement must never lose to the scan
      rate_opt = rate_grid[best];
      iop_opt = best_val;
    }
    const double left = std::max(rs, rate_opt - search.step);
    const double right = std::min(search.rate_max, rate_opt + search.step);
    const bool certified = iop_opt <= objective(left) + 1e-12 &&
                           iop_opt <= objective(right) + 1e-12;

    // Monte Carlo objective on the coarse grid, common random numbers.
    std::vector<RatePair> rates;
    rates.reserve(rate_grid.size());
    for (double r : rate_grid) rates.push_back({r, r, rs, rs});
    const auto mc = estimate_curve(cg, rates, scheme, trials, seed);
    std::size_t mc_best = 0;
    double mc_best_val = kInf;
    for (std::size_t j = 0; j < mc.size(); ++j) {
      const double v = mc[j].p_int_overall.value + mc[j].p_out_overall.value;
      if (v < mc_best_val) {
        mc_best_val = v;
        mc_best = j;
      }
    }
    const double mc_se = std::sqrt(mc[mc_best].p_int_overall.std_error *
                                       mc[mc_best].p_int_overall.std_error +
                                   mc[mc_best].p_out_overall.std_error *
                                       mc[mc_best].p_out_overall.std_error);
    result.rows.push_back({scheme,
                           {db, rate_opt, iop_opt, certified ? 1.0 : 0.0,
                            rate_grid[mc_best], mc_best_val, mc_se}});
  }
  return result;
}

SweepResult outage_vs_snr(const SystemConfig& config, double rs, Scheme scheme,
                          const std::vector<double>& snr_grid_db, double p_int_constraint,
                          std::uint64_t trials, std::uint64_t seed) {
  if (snr_grid_db.empty()) throw std::invalid_argument("outage_vs_snr: empty SNR grid");
  SweepResult result;
  result.id = "outage-vs-snr";
  result.value_columns = {"p_int_constraint", "gamma_m_db", "ro_m", "ro_s",
                          "p_out_formula", "formula_valid", "p_out_mc", "p_out_mc_se"};
  result.metadata.emplace_back("experiment", result.id);
  result.metadata.emplace_back("scheme", scheme_name(scheme));
  result.metadata.emplace_back("rs", fmt_double(rs));
  result.metadata.emplace_back("p_int_constraint", fmt_double(p_int_constraint));
  result.metadata.emplace_back("trials", std::to_string(trials));
  result.metadata.emplace_back("seed", std::to_string(seed));
  append_config_metadata(result, config);

  for (double db : snr_grid_db) {
    SystemConfig cg = config;
    cg.gamma_m = db_to_linear(db);
    const RatePair rates = constrained_rates(scheme, cg, rs, p_int_constraint);
    SrtPoint f;
    const bool ok = try_formula(scheme, cg, rates, f);
    const bool valid =
        ok && (scheme != Scheme::ic_uss || ic_uss_asymptotics_valid(cg, rates.ro_s));
    const McPoint mc = estimate_point(cg, rates, scheme, trials, seed);
    result.rows.push_back({scheme,
                           {p_int_constraint, db, rates.ro_m, rates.ro_s,
                            ok ? f.p_out_overall : kNan, valid ? 1.0 : 0.0,
                            mc.p_out_overall.value, mc.p_out_overall.std_error}});
  }
  return result;
}

SweepResult exact_vs_asymptotic(const SystemConfig& config, double rs,
                                const std::vector<double>& snr_grid_db,
                                double p_int_constraint) {
  if (snr_grid_db.empty()) throw std::invalid_argument("exact_vs_asymptotic: empty SNR grid");
  SweepResult result;
  result.id = "exact-vs-asymptotic";
  result.value_columns = {"p_int_constraint", "gamma_m_db", "ro_m", "ro_s",
                          "p_out_finite", "p_out_asymptotic", "rel_gap"};
  result.metadata.emplace_back("experiment", result.id);
  result.metadata.emplace_back("rs", fmt_double(rs));
  result.metadata.emplace_back("p_int_constraint", fmt_double(p_int_constraint));
  append_config_metadata(result, config);

  for (Scheme scheme : {Scheme::oss, Scheme::il_uss, Scheme::ic_uss}) {
    for (double db : snr_grid_db) {
      SystemConfig cg = config;
      cg.gamma_m = db_to_linear(db);
      const RatePair rates = constrained_rates(scheme, cg, rs, p_int_constraint);
      const double finite = analytic_point(scheme, cg, rates).p_out_overall;
      double asym = kNan;
      switch (scheme) {
        case Scheme::oss: {
          const auto [m, s] =
              oss_asymptotic_outage(cg, rates, p_int_constraint, p_int_constraint);
          asym = m * s;
          break;
        }
        case Scheme::il_uss: {
          const auto [m, s] =
              il_uss_asymptotic_outage(cg, rates, p_int_constraint, p_int_constraint);
          asym = m * s;
          break;
        }
        case Scheme::ic_uss: {
          const auto [m, s] = ic_uss_asymptotic_outage(cg, rates);
          asym = m * s;
          break;
        }
      }
      const double rel_gap = std::abs(asym - finite) / finite;
      result.rows.push_back(
          {scheme, {p_int_constraint, db, rates.ro_m, rates.ro_s, finite, asym, rel_gap}});
    }
  }
  return result;
}

SweepResult diversity_sweep(const SystemConfig& config, double p_int_constraint,
                            const std::vector<double>& snr_grid_db, double rs,
                            std::uint64_t fallback_trials, std::uint64_t fallback_seed) {
  SweepResult result;
  result.id = "diversity";
  result.value_columns = {"gamma_m_db", "ro_m", "ro_s", "p_out_overall", "fitted_order"};
  result.metadata.emplace_back("experiment", result.id);
  result.metadata.emplace_back("rs", fmt_double(rs));
  result.metadata.emplace_back("p_int_constraint", fmt_double(p_int_constraint));
  append_config_metadata(result, config);

  for (Scheme scheme : {Scheme::oss, Scheme::il_uss, Scheme::ic_uss}) {
    const DiversityReport report = diversity_report(config, p_int_constraint, scheme,
                                                    snr_grid_db, rs, fallback_trials,
                                                    fallback_seed);
    result.metadata.emplace_back(std::string("fitted_order_") + scheme_name(scheme),
                                 fmt_double(report.fitted_order));
    for (std::size_t i = 0; i < report.snr_grid.size(); ++i) {
      result.rows.push_back({scheme,
                             {snr_grid_db[i], report.rates[i].ro_m, report.rates[i].ro_s,
                              report.outage_values[i], report.fitted_order}});
    }
  }
  return result;
}

SweepResult merge_sweeps(const std::vector<SweepResult>& parts) {
  if (parts.empty()) throw std::invalid_argument("merge_sweeps: nothing to merge");
  SweepResult merged;
  merged.id = parts.front().id;
  merged.value_columns = parts.front().value_columns;
  // Keep only metadata entries on which every part agrees; per-part values
  // (scheme, rs, ...) already appear as row columns.
  for (const auto& entry : parts.front().metadata) {
    bool shared = true;
    for (const auto& part : parts)
      shared = shared && std::find(part.metadata.begin(), part.metadata.end(), entry) !=
                             part.metadata.end();
    if (shared) merged.metadata.push_back(entry);
  }
  for (const auto& part : parts) {
    if (part.value_columns != merged.value_columns)
      throw std::invalid_argument("merge_sweeps: column mismatch");
    merged.rows.insert(merged.rows.end(), part.rows.begin(), part.rows.end());
  }
  return merged;
}

std::string format_csv_value(double v) {
  char buf[40];
  if (std::isnan(v)) return "nan";
  if (v != 0.0 && std::abs(v) < 1e-3) {
    std::snprintf(buf, sizeof buf, "%.10e", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.10f", v);
  }
  return buf;
}

void write_csv(const SweepResult& result, std::ostream& out) {
  for (const auto& [k, v] : result.metadata) out << "# " << k << ": " << v << "\n";
  out << "scheme";
  for (const auto& col : result.value_columns) out << ',' << col;
  out << "\n";
  for (const auto& row : result.rows) {
    out << scheme_name(row.scheme);
    for (double v : row.values) out << ',' << format_csv_value(v);
    out << "\n";
  }
}

}  // namespace hetsrt
