#include "landau/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <tuple>

namespace landau {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "fail";
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

Status judge(double max_error, double tolerance) {
  return max_error <= tolerance ? Status::pass : Status::fail;
}

VerificationRecord make_record(std::string suite, std::string check_name, ParamMap parameters, double max_error,
                               double tolerance) {
  VerificationRecord r;
  r.suite = std::move(suite);
  r.check_name = std::move(check_name);
  r.parameters = std::move(parameters);
  r.max_error = max_error;
  r.tolerance = tolerance;
  r.status = judge(max_error, tolerance);
  return r;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string json_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

namespace {

std::string json_number(double v) { return std::isfinite(v) ? format_double(v) : "null"; }

std::string param_json(const ParamValue& v) {
  if (auto i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (auto d = std::get_if<double>(&v)) return json_number(*d);
  return json_quote(std::get<std::string>(v));
}

std::string param_text(const ParamValue& v) {
  if (auto i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (auto d = std::get_if<double>(&v)) return format_double(*d);
  return std::get<std::string>(v);
}

}  // namespace

std::string to_json_line(const VerificationRecord& r) {
  std::string out = "{\"suite\":" + json_quote(r.suite) + ",\"check_name\":" + json_quote(r.check_name) +
                    ",\"parameters\":{";
  bool first = true;
  for (const auto& [k, v] : r.parameters) {
    if (!first) out += ',';
    first = false;
    out += json_quote(k) + ':' + param_json(v);
  }
  out += "},\"max_error\":" + json_number(r.max_error) + ",\"tolerance\":" + json_number(r.tolerance) +
         ",\"status\":" + json_quote(status_name(r.status)) + ",\"runtime_ms\":" + json_number(r.runtime_ms) + "}";
  return out;
}

std::string csv_header() { return "suite,check_name,parameters,max_error,tolerance,status,runtime_ms"; }

std::string to_csv_row(const VerificationRecord& r) {
  std::string params;
  for (const auto& [k, v] : r.parameters) {
    if (!params.empty()) params += ';';
    params += k + '=' + param_text(v);
  }
  return r.suite + ',' + r.check_name + ',' + params + ',' + format_double(r.max_error) + ',' +
         format_double(r.tolerance) + ',' + std::string(status_name(r.status)) + ',' + format_double(r.runtime_ms);
}

void sort_canonical(std::vector<VerificationRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const VerificationRecord& a, const VerificationRecord& b) {
    return std::tie(a.suite, a.check_name, a.parameters) < std::tie(b.suite, b.check_name, b.parameters);
  });
}

std::string render(const std::vector<VerificationRecord>& records, OutputFormat format) {
  std::string out;
  if (format == OutputFormat::csv) out += csv_header() + '\n';
  for (const auto& r : records) out += (format == OutputFormat::csv ? to_csv_row(r) : to_json_line(r)) + '\n';
  return out;
}

}  // namespace landau
