// Settings parsing and the provenance manifest.
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "hetsrt/config_io.hpp"

using namespace hetsrt;

TEST_CASE("settings files accept comments, blanks, and every known key") {
  std::istringstream in(
      "# run description\n"
      "\n"
      "sigma2_mm = 1.5\n"
      "sigma2_sm=0.02\n"
      "gamma_m_db = 30\n"
      "beta = 0.25\n"
      "alpha=0.6\n"
      "ro = 1.25\n"
      "rs = 0.4\n"
      "ro_s = 0.9\n"
      "trials = 1e6\n"
      "seed = 424242\n");
  const RunSettings s = parse_settings_file(in);
  CHECK(s.config.sigma2_mm == 1.5);
  CHECK(s.config.sigma2_sm == 0.02);
  CHECK(s.config.gamma_m == doctest::Approx(1000.0).epsilon(1e-12));
  CHECK(s.config.beta == 0.25);
  CHECK(s.config.alpha == 0.6);
  CHECK(s.rates.ro_m == 1.25);  // "ro" set both...
  CHECK(s.rates.ro_s == 0.9);   // ...then the specific key overrode one cell
  CHECK(s.rates.rs_m == 0.4);
  CHECK(s.rates.rs_s == 0.4);
  CHECK(s.trials == 1000000);
  CHECK(s.seed == 424242);
}

TEST_CASE("unknown keys and malformed lines are rejected with their line number") {
  std::istringstream unknown("beta = 0.5\nbogus_key = 1\n");
  try {
    parse_settings_file(unknown);
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    CHECK(what.find("line 2") != std::string::npos);
    CHECK(what.find("bogus_key") != std::string::npos);
  }

  std::istringstream no_equals("beta 0.5\n");
  CHECK_THROWS_AS(parse_settings_file(no_equals), std::invalid_argument);

  std::istringstream bad_number("beta = fast\n");
  CHECK_THROWS_AS(parse_settings_file(bad_number), std::invalid_argument);

  std::istringstream trailing("beta = 0.5x\n");
  CHECK_THROWS_AS(parse_settings_file(trailing), std::invalid_argument);

  std::istringstream fractional_trials("trials = 10.5\n");
  CHECK_THROWS_AS(parse_settings_file(fractional_trials), std::invalid_argument);
}

TEST_CASE("missing settings files are reported") {
  CHECK_THROWS_AS(load_settings_file("/nonexistent/path/settings.cfg"),
                  std::invalid_argument);
}

TEST_CASE("defaults survive an empty settings file") {
  std::istringstream in("# nothing but comments\n\n");
  const RunSettings s = parse_settings_file(in);
  CHECK(s.config.sigma2_mm == 1.0);
  CHECK(s.trials == 1000000);
  CHECK(s.seed == 12345);
}

TEST_CASE("manifest records command, resolved parameters, and duration") {
  RunManifest m;
  m.command = "hetsrt figure srt-curve --out \"a b.csv\"";
  m.output_path = "a b.csv";
  m.scheme = "all";
  m.settings.trials = 250000;
  m.settings.seed = 9;
  m.settings.config.beta = 0.75;
  m.duration_seconds = 1.5;
  std::ostringstream out;
  write_manifest_json(m, out);
  const std::string js = out.str();
  CHECK(js.find("\"version\": \"hetsrt 1.0.0\"") != std::string::npos);
  CHECK(js.find("\\\"a b.csv\\\"") != std::string::npos);  // quotes escaped
  CHECK(js.find("\"beta\": 0.75") != std::string::npos);
  CHECK(js.find("\"gamma_m_db\": 25") != std::string::npos);
  CHECK(js.find("\"trials\": 250000") != std::string::npos);
  CHECK(js.find("\"seed\": 9") != std::string::npos);
  CHECK(js.find("\"duration_seconds\": 1.5") != std::string::npos);
}
