#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "sparsesum/error.hpp"
#include "sparsesum/report.hpp"

using namespace sparsesum;

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> parts;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (!line.empty() && line.back() == ',') parts.emplace_back();
  return parts;
}

}  // namespace

TEST_CASE("round_sig10") {
  CHECK(report::round_sig10(3.14159265358979) == 3.141592654);
  CHECK(report::round_sig10(-1.23456789012e-7) == -1.23456789e-7);
  CHECK(report::round_sig10(0.0) == 0.0);
}

TEST_CASE("parse_format") {
  CHECK(report::parse_format("csv") == report::Format::Csv);
  CHECK(report::parse_format("json") == report::Format::Json);
  CHECK_THROWS_AS(report::parse_format("xml"), Error);
}

TEST_CASE("csv and json carry the same numbers") {
  const auto rows = experiments::run_zeta({1.5, 2.0, 2.5});
  const auto table = report::zeta_table(rows);

  std::ostringstream csv, json;
  report::write(csv, table, report::Format::Csv);
  report::write(json, table, report::Format::Json);

  const auto doc = nlohmann::json::parse(json.str());
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  const auto cols = split(header);
  REQUIRE(cols.size() == doc["columns"].size());
  for (std::size_t i = 0; i < cols.size(); ++i) CHECK(cols[i] == doc["columns"][i]);

  std::string line;
  std::size_t r = 0;
  while (std::getline(lines, line)) {
    const auto cells = split(line);
    const auto& jrow = doc["rows"][r];
    REQUIRE(cells.size() == jrow.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (jrow[i].is_null()) {
        CHECK(cells[i].empty());
      } else {
        CHECK(std::stod(cells[i]) == jrow[i].get<double>());
      }
    }
    ++r;
  }
  CHECK(r == rows.size());
  // p = 2.5 has no reference value
  CHECK(doc["rows"][2][2].is_null());
}

TEST_CASE("output is deterministic") {
  const experiments::Grid grid{0.1, 0.9, 5};
  auto render = [&] {
    std::ostringstream out;
    report::write(out, report::curve_table("example2", 1.0, experiments::run_example2(1.0, grid)),
                  report::Format::Json);
    return out.str();
  };
  CHECK(render() == render());
}

TEST_CASE("zeta text table") {
  std::ostringstream out;
  report::write_zeta_text(out, experiments::run_zeta({1.5, 1.8}));
  const auto s = out.str();
  CHECK(s.find("2.6124") != std::string::npos);
  CHECK(s.find("2.6122") != std::string::npos);
  CHECK(s.find("-0.0002") != std::string::npos);
  CHECK(s.find("-0.0000") == std::string::npos);
}
