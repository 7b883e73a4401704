// Settings-file parsing and manifest emission.
#include "hetsrt/config_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hetsrt {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad numeric value for '" + key + "': " + value);
  }
  if (used != value.size())
    throw std::invalid_argument("bad numeric value for '" + key + "': " + value);
  return v;
}

std::uint64_t parse_count(const std::string& key, const std::string& value) {
  const double v = parse_double(key, value);  // allow 1e6-style counts
  if (!(v >= 0.0) || v != static_cast<double>(static_cast<std::uint64_t>(v)))
    throw std::invalid_argument("'" + key + "' must be a nonnegative integer: " + value);
  return static_cast<std::uint64_t>(v);
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string json_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void apply_setting(RunSettings& s, const std::string& key, const std::string& value) {
  if (key == "sigma2_mm") s.config.sigma2_mm = parse_double(key, value);
  else if (key == "sigma2_ss") s.config.sigma2_ss = parse_double(key, value);
  else if (key == "sigma2_me") s.config.sigma2_me = parse_double(key, value);
  else if (key == "sigma2_se") s.config.sigma2_se = parse_double(key, value);
  else if (key == "sigma2_ms") s.config.sigma2_ms = parse_double(key, value);
  else if (key == "sigma2_sm") s.config.sigma2_sm = parse_double(key, value);
  else if (key == "gamma_m_db") s.config.gamma_m = db_to_linear(parse_double(key, value));
  else if (key == "beta") s.config.beta = parse_double(key, value);
  else if (key == "alpha") s.config.alpha = parse_double(key, value);
  else if (key == "ro_m") s.rates.ro_m = parse_double(key, value);
  else if (key == "ro_s") s.rates.ro_s = parse_double(key, value);
  else if (key == "rs_m") s.rates.rs_m = parse_double(key, value);
  else if (key == "rs_s") s.rates.rs_s = parse_double(key, value);
  else if (key == "ro") s.rates.ro_m = s.rates.ro_s = parse_double(key, value);
  else if (key == "rs") s.rates.rs_m = s.rates.rs_s = parse_double(key, value);
  else if (key == "trials") s.trials = parse_count(key, value);
  else if (key == "seed") s.seed = parse_count(key, value);
  else throw std::invalid_argument("unknown settings key: " + key);
}

RunSettings parse_settings_file(std::istream& in) {
  RunSettings settings;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected key=value, got '" + stripped + "'");
    try {
      apply_setting(settings, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return settings;
}

RunSettings load_settings_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open settings file: " + path);
  return parse_settings_file(in);
}

void write_manifest_json(const RunManifest& m, std::ostream& out) {
  const SystemConfig& c = m.settings.config;
  const RatePair& r = m.settings.rates;
  out << "{\n"
      << "  \"version\": \"" << json_escape(m.version) << "\",\n"
      << "  \"command\": \"" << json_escape(m.command) << "\",\n"
      << "  \"output\": \"" << json_escape(m.output_path) << "\",\n"
      << "  \"scheme\": \"" << json_escape(m.scheme) << "\",\n"
      << "  \"config\": {\n"
      << "    \"sigma2_mm\": " << json_number(c.sigma2_mm) << ",\n"
      << "    \"sigma2_ss\": " << json_number(c.sigma2_ss) << ",\n"
      << "    \"sigma2_me\": " << json_number(c.sigma2_me) << ",\n"
      << "    \"sigma2_se\": " << json_number(c.sigma2_se) << ",\n"
      << "    \"sigma2_ms\": " << json_number(c.sigma2_ms) << ",\n"
      << "    \"sigma2_sm\": " << json_number(c.sigma2_sm) << ",\n"
      << "    \"gamma_m_db\": " << json_number(linear_to_db(c.gamma_m)) << ",\n"
      << "    \"beta\": " << json_number(c.beta) << ",\n"
      << "    \"alpha\": " << json_number(c.alpha) << "\n"
      << "  },\n"
      << "  \"rates\": {\n"
      << "    \"ro_m\": " << json_number(r.ro_m) << ",\n"
      << "    \"ro_s\": " << json_number(r.ro_s) << ",\n"
      << "    \"rs_m\": " << json_number(r.rs_m) << ",\n"
      << "    \"rs_s\": " << json_number(r.rs_s) << "\n"
      << "  },\n"
      << "  \"trials\": " << m.settings.trials << ",\n"
      << "  \"seed\": " << m.settings.seed << ",\n"
      << "  \"duration_seconds\": " << json_number(m.duration_seconds) << "\n"
      << "}\n";
}

}  // namespace hetsrt
