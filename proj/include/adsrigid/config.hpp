#pragma once

// Run configuration: defaults, a flat `key = value` file, and validation.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adsrigid/constructions.hpp"
#include "adsrigid/fd.hpp"
#include "adsrigid/fuchsian.hpp"
#include "adsrigid/report.hpp"

namespace adsrigid {

struct RunConfig {
  std::string command;
  FixtureParams fixture;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::optional<double> tolerance;  // overrides the command's primary tolerance
  FdScheme scheme;
  int mesh_level = 3;
  int max_mesh_level = kDefaultMaxMeshLevel;
  std::vector<double> s_samples{-0.1, -0.3, -0.5};
  std::vector<double> phi_k{-2.0, -4.0};
  OutputFormat output = OutputFormat::Table;
  std::string out_file;
  std::string mesh_out;
  int threads = 0;  // 0: OpenMP default
};

/// Keys accepted in config files (dashes and underscores are interchangeable).
const std::vector<std::string>& config_keys();

/// Sets one key from its textual value. Throws Config for unknown keys or
/// unparsable values.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Reads `key = value` lines; `#` starts a comment. Returns the keys set.
std::vector<std::string> apply_config_stream(RunConfig& config, std::istream& in,
                                             const std::string& source = "config");
std::vector<std::string> apply_config_file(RunConfig& config, const std::string& path);

/// Range checks on every numeric field. Throws Config.
void validate(const RunConfig& config);

/// Provenance block for reports: every setting as text.
std::map<std::string, std::string> describe(const RunConfig& config);

OutputFormat parse_output_format(const std::string& s);
std::vector<double> parse_real_list(const std::string& s);

}  // namespace adsrigid
