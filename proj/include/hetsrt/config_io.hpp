// key=value run-settings files and the JSON run manifest sidecar.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hetsrt/model.hpp"

namespace hetsrt {

// Everything a run needs beyond the scheme choice; CLI flags override these.
struct RunSettings {
  SystemConfig config;
  RatePair rates;
  std::uint64_t trials = 1000000;
  std::uint64_t seed = 12345;
};

// Applies one key=value pair; throws std::invalid_argument on unknown keys or
// unparseable values.  "ro" and "rs" set both cells at once.
void apply_setting(RunSettings& settings, const std::string& key,
                   const std::string& value);

// Parses a whole settings file ('#' comments and blank lines ignored).
RunSettings parse_settings_file(std::istream& in);
RunSettings load_settings_file(const std::string& path);

// Provenance record written next to each CSV (<out>.manifest.json).  Wall-clock
// duration lives only here so the CSV itself stays byte-stable across reruns.
struct RunManifest {
  std::string command;
  std::string output_path;
  std::string scheme;
  RunSettings settings;
  std::string version = "hetsrt 1.0.0";
  double duration_seconds = 0.0;
};

void write_manifest_json(const RunManifest& manifest, std::ostream& out);

}  // namespace hetsrt
