#pragma once

// Named residuals with tolerances and verdicts, and their serialization.

#include <map>
#include <string>
#include <vector>

namespace adsrigid {

enum class Relation { Less, LessEqual, GreaterEqual, Equal };
const char* to_string(Relation r);

struct CheckRow {
  std::string id;
  std::string location;
  double value = 0.0;
  double tolerance = 0.0;
  Relation relation = Relation::Less;
  bool pass = false;
};

class CheckReport {
 public:
  /// Appends a row; the verdict is value `relation` tolerance. NaN never passes.
  const CheckRow& add(std::string id, std::string location, double value, double tolerance,
                      Relation relation = Relation::Less);

  void set_provenance(const std::string& key, const std::string& value) {
    provenance_[key] = value;
  }
  const std::map<std::string, std::string>& provenance() const { return provenance_; }
  const std::vector<CheckRow>& rows() const { return rows_; }
  bool passed() const;
  /// Largest value among rows whose id matches.
  double max_value(const std::string& id) const;

  void append(const CheckReport& other);

 private:
  std::vector<CheckRow> rows_;
  std::map<std::string, std::string> provenance_;
};

enum class OutputFormat { Table, Records, Csv };
const char* to_string(OutputFormat f);

/// Deterministic serialization: identical reports give identical bytes.
std::string emit_report(const CheckReport& report, OutputFormat format);

/// 0 when every row passes, 1 otherwise.
inline int exit_code(const CheckReport& report) { return report.passed() ? 0 : 1; }

/// Shortest round-trip decimal form of a double.
std::string format_number(double x);

}  // namespace adsrigid
