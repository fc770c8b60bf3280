#include "adsrigid/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numbers>
#include <sstream>

#include "adsrigid/error.hpp"

namespace adsrigid {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '-', '_');
  return key;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
  throw Error(ErrorKind::Config, "invalid value '" + value + "' for '" + key + "'");
}

double parse_real(const std::string& key, const std::string& text) {
  const std::string v = trim(text);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) bad_value(key, text);
  return x;
}

template <class Int>
Int parse_int(const std::string& key, const std::string& text) {
  const std::string v = trim(text);
  Int x{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) bad_value(key, text);
  return x;
}

std::string join(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + format_number(xs[i]);
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::Config, what);
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "fixture",    "s",          "amplitude",      "width",     "samples",   "seed",
      "tolerance",  "fd_step",    "field_step",     "richardson", "mesh_level", "max_mesh_level",
      "s_samples",  "phi_k",      "output",         "out_file",  "mesh_out",  "threads"};
  return keys;
}

OutputFormat parse_output_format(const std::string& s) {
  if (s == "table") return OutputFormat::Table;
  if (s == "records") return OutputFormat::Records;
  if (s == "csv") return OutputFormat::Csv;
  throw Error(ErrorKind::Config, "unknown output format '" + s + "' (table, records, csv)");
}

std::vector<double> parse_real_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real("list", item));
  if (out.empty()) throw Error(ErrorKind::Config, "empty list");
  return out;
}

void apply_setting(RunConfig& c, const std::string& raw_key, const std::string& raw_value) {
  const std::string key = normalize_key(trim(raw_key));
  const std::string value = trim(raw_value);
  if (key == "fixture") c.fixture.name = value;
  else if (key == "s") c.fixture.s = parse_real(key, value);
  else if (key == "amplitude") c.fixture.amplitude = parse_real(key, value);
  else if (key == "width") c.fixture.width = parse_real(key, value);
  else if (key == "samples") c.samples = parse_int<std::size_t>(key, value);
  else if (key == "seed") c.seed = parse_int<std::uint64_t>(key, value);
  else if (key == "tolerance") c.tolerance = parse_real(key, value);
  else if (key == "fd_step") c.scheme.step = parse_real(key, value);
  else if (key == "field_step") c.scheme.field_step = parse_real(key, value);
  else if (key == "richardson") c.scheme.richardson = parse_int<int>(key, value);
  else if (key == "mesh_level") c.mesh_level = parse_int<int>(key, value);
  else if (key == "max_mesh_level") c.max_mesh_level = parse_int<int>(key, value);
  else if (key == "s_samples") c.s_samples = parse_real_list(value);
  else if (key == "phi_k") c.phi_k = parse_real_list(value);
  else if (key == "output") c.output = parse_output_format(value);
  else if (key == "out_file") c.out_file = value;
  else if (key == "mesh_out") c.mesh_out = value;
  else if (key == "threads") c.threads = parse_int<int>(key, value);
  else throw Error(ErrorKind::Config, "unknown config key '" + raw_key + "'");
}

std::vector<std::string> apply_config_stream(RunConfig& config, std::istream& in,
                                             const std::string& source) {
  std::vector<std::string> set;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::Config,
                  source + ":" + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = normalize_key(trim(line.substr(0, eq)));
    try {
      apply_setting(config, key, line.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(ErrorKind::Config, source + ":" + std::to_string(lineno) + ": " + e.what());
    }
    set.push_back(key);
  }
  return set;
}

std::vector<std::string> apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Config, "cannot open config file '" + path + "'");
  return apply_config_stream(config, in, path);
}

void validate(const RunConfig& c) {
  const auto& names = fixture_names();
  require(std::find(names.begin(), names.end(), c.fixture.name) != names.end(),
          "unknown fixture '" + c.fixture.name + "'");
  require(c.samples >= 1 && c.samples <= 100000, "samples must lie in [1, 100000]");
  require(!c.tolerance || *c.tolerance > 0.0, "tolerance must be positive");
  require(c.scheme.step > 0.0 && c.scheme.step <= 0.1, "fd-step must lie in (0, 0.1]");
  require(c.scheme.field_step > 0.0 && c.scheme.field_step <= 0.2,
          "field-step must lie in (0, 0.2]");
  require(c.scheme.richardson >= 0 && c.scheme.richardson <= 3, "richardson must lie in [0, 3]");
  require(c.max_mesh_level >= 0 && c.max_mesh_level <= 8, "max-mesh-level must lie in [0, 8]");
  require(c.mesh_level >= 0 && c.mesh_level <= c.max_mesh_level,
          "mesh-level must lie in [0, max-mesh-level]");
  require(c.fixture.s > -std::numbers::pi / 2.0 && c.fixture.s <= 0.0, "s must lie in (-pi/2, 0]");
  require(c.threads >= 0, "threads must be non-negative");
  for (double s : c.s_samples)
    require(s > -1.5 && s < 0.0, "s-samples must lie in (-1.5, 0)");
  for (double k : c.phi_k) require(k < -1.0, "phi-k values must be below -1");
}

std::map<std::string, std::string> describe(const RunConfig& c) {
  std::map<std::string, std::string> m;
  m["command"] = c.command;
  m["fixture"] = c.fixture.name;
  m["s"] = format_number(c.fixture.s);
  m["amplitude"] = format_number(c.fixture.amplitude);
  m["width"] = format_number(c.fixture.width);
  m["samples"] = std::to_string(c.samples);
  m["seed"] = std::to_string(c.seed);
  m["fd_step"] = format_number(c.scheme.step);
  m["field_step"] = format_number(c.scheme.field_step);
  m["richardson"] = std::to_string(c.scheme.richardson);
  m["mesh_level"] = std::to_string(c.mesh_level);
  m["max_mesh_level"] = std::to_string(c.max_mesh_level);
  m["s_samples"] = join(c.s_samples);
  m["phi_k"] = join(c.phi_k);
  m["output"] = to_string(c.output);
  m["tolerance"] = c.tolerance ? format_number(*c.tolerance) : "default";
  m["out_file"] = c.out_file;
  m["mesh_out"] = c.mesh_out;
  m["threads"] = std::to_string(c.threads);
  return m;
}

}  // namespace adsrigid
