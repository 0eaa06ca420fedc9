#include "landau/report.hpp"

#include "doctest.h"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

using namespace landau;

TEST_CASE("judge") {
  CHECK(judge(1e-9, 1e-8) == Status::pass);
  CHECK(judge(1e-8, 1e-8) == Status::pass);
  CHECK(judge(2e-8, 1e-8) == Status::fail);
  CHECK(judge(std::nan(""), 1.0) == Status::fail);
  CHECK(judge(0.0, 0.0) == Status::pass);
}

TEST_CASE("format_double") {
  CHECK(format_double(0.5) == "5.0000000000000000e-01");
  CHECK(format_double(-1234.5) == "-1.2345000000000000e+03");
  CHECK(format_double(0.1) == "1.0000000000000001e-01");
  CHECK(format_double(std::nan("")) == "nan");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  // 17 significant digits round-trip.
  for (double v : {1.0 / 3.0, 6.02214076e23, 2.2250738585072014e-308})
    CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("json and csv rows") {
  const auto r = make_record("ladder", "overlap", {{"B", 1.0}, {"n", 2LL}, {"direction", std::string("raise")}},
                             3e-12, 1e-8);
  CHECK(r.status == Status::pass);
  CHECK(to_json_line(r) ==
        R"({"suite":"ladder","check_name":"overlap","parameters":{"B":1.0000000000000000e+00,"direction":"raise","n":2},)"
        R"("max_error":3.0000000000000001e-12,"tolerance":1.0000000000000000e-08,"status":"pass","runtime_ms":0.0000000000000000e+00})");
  CHECK(csv_header() == "suite,check_name,parameters,max_error,tolerance,status,runtime_ms");
  CHECK(to_csv_row(r) ==
        "ladder,overlap,B=1.0000000000000000e+00;direction=raise;n=2,3.0000000000000001e-12,1.0000000000000000e-08,pass,"
        "0.0000000000000000e+00");

  auto bad = make_record("s", "c", {}, std::nan(""), 1.0);
  CHECK(to_json_line(bad).find("\"max_error\":null") != std::string::npos);
  CHECK(to_json_line(bad).find("\"status\":\"fail\"") != std::string::npos);
  CHECK(json_quote("a\"b\\c\n") == "\"a\\\"b\\\\c\\n\"");
}

TEST_CASE("canonical order and render") {
  std::vector<VerificationRecord> v{
      make_record("b", "x", {{"n", 2LL}}, 0, 0),
      make_record("a", "y", {}, 0, 0),
      make_record("b", "x", {{"n", 1LL}}, 0, 0),
      make_record("a", "x", {}, 0, 0),
  };
  sort_canonical(v);
  CHECK(v[0].suite == "a");
  CHECK(v[0].check_name == "x");
  CHECK(v[1].check_name == "y");
  CHECK(std::get<long long>(v[2].parameters.at("n")) == 1);
  CHECK(std::get<long long>(v[3].parameters.at("n")) == 2);

  const std::string csv = render(v, OutputFormat::csv);
  CHECK(csv.rfind(csv_header() + "\n", 0) == 0);
  const std::string json = render(v, OutputFormat::json);
  CHECK(std::count(json.begin(), json.end(), '\n') == 4);
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK_FALSE(parse_format("xml").has_value());
  CHECK(status_name(Status::skipped) == "skipped");
}
