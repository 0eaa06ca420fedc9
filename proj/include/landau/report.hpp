#pragma once

// Verification records and their fixed-format serialization (JSON Lines and
// CSV). Floats are always written with 17 significant digits in lowercase
// scientific notation, independent of locale.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace landau {

enum class Status { pass, fail, skipped };
enum class OutputFormat { csv, json };

std::string_view status_name(Status s);
std::optional<OutputFormat> parse_format(std::string_view name);

using ParamValue = std::variant<long long, double, std::string>;
using ParamMap = std::map<std::string, ParamValue>;

struct VerificationRecord {
  std::string suite;
  std::string check_name;
  ParamMap parameters;
  double max_error = 0.0;
  double tolerance = 0.0;
  Status status = Status::fail;
  double runtime_ms = 0.0;
};

/// pass iff max_error <= tolerance; NaN fails.
Status judge(double max_error, double tolerance);

VerificationRecord make_record(std::string suite, std::string check_name, ParamMap parameters, double max_error,
                               double tolerance);

/// "%.16e", or "nan"/"inf"/"-inf".
std::string format_double(double v);

/// JSON string literal with escaping.
std::string json_quote(std::string_view s);

std::string to_json_line(const VerificationRecord& r);
std::string csv_header();
std::string to_csv_row(const VerificationRecord& r);

/// Canonical order: suite, check_name, then parameters.
void sort_canonical(std::vector<VerificationRecord>& records);

/// Writes the records (with a CSV header when format is csv).
std::string render(const std::vector<VerificationRecord>& records, OutputFormat format);

}  // namespace landau
