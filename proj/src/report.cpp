#include "adsrigid/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace adsrigid {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEqual: return "<=";
    case Relation::GreaterEqual: return ">=";
    case Relation::Equal: return "==";
  }
  return "?";
}

const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Table: return "table";
    case OutputFormat::Records: return "records";
    case OutputFormat::Csv: return "csv";
  }
  return "?";
}

const CheckRow& CheckReport::add(std::string id, std::string location, double value,
                                 double tolerance, Relation relation) {
  bool pass = false;
  switch (relation) {
    case Relation::Less: pass = value < tolerance; break;
    case Relation::LessEqual: pass = value <= tolerance; break;
    case Relation::GreaterEqual: pass = value >= tolerance; break;
    case Relation::Equal: pass = value == tolerance; break;
  }
  rows_.push_back({std::move(id), std::move(location), value, tolerance, relation, pass});
  return rows_.back();
}

bool CheckReport::passed() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const CheckRow& r) { return r.pass; });
}

double CheckReport::max_value(const std::string& id) const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& r : rows_)
    if (r.id == id) m = std::max(m, r.value);
  return m;
}

void CheckReport::append(const CheckReport& other) {
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
  for (const auto& [k, v] : other.provenance_) provenance_.emplace(k, v);
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string emit_table(const CheckReport& report) {
  std::ostringstream out;
  for (const auto& [k, v] : report.provenance()) out << "# " << k << ": " << v << '\n';
  std::size_t id_w = 5, loc_w = 8;
  for (const auto& r : report.rows()) {
    id_w = std::max(id_w, r.id.size());
    loc_w = std::max(loc_w, r.location.size());
  }
  auto line = [&](const std::string& id, const std::string& loc, const std::string& value,
                  const std::string& rel, const std::string& tol, const std::string& verdict) {
    out << std::left << std::setw(static_cast<int>(id_w)) << id << "  "
        << std::setw(static_cast<int>(loc_w)) << loc << "  " << std::setw(24) << value << "  "
        << std::setw(2) << rel << "  " << std::setw(24) << tol << "  " << verdict << '\n';
  };
  line("check", "location", "value", "", "tolerance", "verdict");
  for (const auto& r : report.rows())
    line(r.id, r.location, format_number(r.value), to_string(r.relation),
         format_number(r.tolerance), r.pass ? "pass" : "FAIL");
  if (!report.rows().empty()) out << "summary: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string emit_csv(const CheckReport& report) {
  std::ostringstream out;
  out << "check,location,value,relation,tolerance,verdict\n";
  for (const auto& r : report.rows())
    out << csv_field(r.id) << ',' << csv_field(r.location) << ',' << format_number(r.value)
        << ',' << to_string(r.relation) << ',' << format_number(r.tolerance) << ','
        << (r.pass ? "pass" : "FAIL") << '\n';
  return out.str();
}

nlohmann::json json_number(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

// One JSON object per line: a provenance header, one line per row and, when
// rows exist, a summary line.
std::string emit_records(const CheckReport& report) {
  std::ostringstream out;
  nlohmann::json header = {{"type", "provenance"}};
  for (const auto& [k, v] : report.provenance()) header["fields"][k] = v;
  out << header.dump() << '\n';
  for (const auto& r : report.rows()) {
    nlohmann::json row = {{"type", "row"},
                          {"check", r.id},
                          {"location", r.location},
                          {"value", json_number(r.value)},
                          {"relation", to_string(r.relation)},
                          {"tolerance", json_number(r.tolerance)},
                          {"verdict", r.pass ? "pass" : "FAIL"}};
    out << row.dump() << '\n';
  }
  if (!report.rows().empty()) {
    nlohmann::json summary = {{"type", "summary"},
                              {"verdict", report.passed() ? "PASS" : "FAIL"},
                              {"rows", report.rows().size()}};
    out << summary.dump() << '\n';
  }
  return out.str();
}

}  // namespace

std::string emit_report(const CheckReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Table: return emit_table(report);
    case OutputFormat::Records: return emit_records(report);
    case OutputFormat::Csv: return emit_csv(report);
  }
  return {};
}

}  // namespace adsrigid
