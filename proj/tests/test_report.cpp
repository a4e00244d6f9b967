#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <vector>

#include "etapair/report.hpp"

using namespace etapair;
using report::Format;
using report::ReportRecord;
using report::Value;

namespace {

ReportRecord sample_record(int n, double value) {
  ReportRecord rec;
  rec.experiment = "sample";
  rec.params = {{"n", n}};
  rec.results = {{"value", value}};
  return rec;
}

}  // namespace

TEST_CASE("real formatting uses 12 significant digits") {
  CHECK(report::format_real(1.0 / 6.0) == "0.166666666667");
  CHECK(report::format_real(2.0 / 3.0) == "0.666666666667");
  CHECK(report::format_real(0.5) == "0.5");
  CHECK(report::format_real(-0.0) == "0");
  CHECK(report::format_real(1e-15) == "1e-15");
  CHECK(report::format_real(2.0678338484619295e-15) == "2.06783384846e-15");
}

TEST_CASE("csv emission") {
  SUBCASE("empty input gives a bare header line") {
    CHECK(report::emit({}, Format::Csv) == "\n");
  }
  SUBCASE("rows follow input order under one header") {
    const std::vector<ReportRecord> records{sample_record(1, 0.5), sample_record(2, 1.0 / 6.0)};
    CHECK(report::emit(records, Format::Csv) == "n,value\n1,0.5\n2,0.166666666667\n");
  }
  SUBCASE("booleans, strings, and empties") {
    ReportRecord rec;
    rec.experiment = "kinds";
    rec.params = {{"flag", true}, {"label", "plain"}};
    rec.results = {{"hole", Value()}, {"tricky", "a,b"}};
    const std::vector<ReportRecord> records{rec};
    CHECK(report::emit(records, Format::Csv) ==
          "flag,label,hole,tricky\ntrue,plain,,\"a,b\"\n");
  }
  SUBCASE("byte-stable across calls") {
    const std::vector<ReportRecord> records{sample_record(3, 0.1), sample_record(4, 0.2)};
    CHECK(report::emit(records, Format::Csv) == report::emit(records, Format::Csv));
  }
}

TEST_CASE("json emission") {
  SUBCASE("one record becomes a single-element array") {
    const std::vector<ReportRecord> records{sample_record(7, 0.25)};
    const auto parsed = nlohmann::json::parse(report::emit(records, Format::Json));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0]["experiment"] == "sample");
    CHECK(parsed[0]["n"] == 7);
    CHECK(parsed[0]["value"] == 0.25);
  }
  SUBCASE("empty array") {
    CHECK(report::emit({}, Format::Json) == "[]\n");
  }
  SUBCASE("key order is insertion order") {
    ReportRecord rec;
    rec.experiment = "order";
    rec.params = {{"zeta", 1}, {"alpha", 2}};
    rec.results = {{"mid", 3}};
    const std::vector<ReportRecord> records{rec};
    const auto text = report::emit(records, Format::Json);
    const auto zeta = text.find("zeta");
    const auto alpha = text.find("alpha");
    const auto mid = text.find("mid");
    CHECK(zeta < alpha);
    CHECK(alpha < mid);
  }
  SUBCASE("empties become null") {
    ReportRecord rec;
    rec.experiment = "holes";
    rec.params = {{"n", 1}};
    rec.results = {{"gap", Value()}};
    const std::vector<ReportRecord> records{rec};
    const auto parsed = nlohmann::json::parse(report::emit(records, Format::Json));
    CHECK(parsed[0]["gap"].is_null());
  }
}

TEST_CASE("heterogeneous keys are a hard error") {
  ReportRecord odd;
  odd.experiment = "sample";
  odd.params = {{"m", 1}};
  odd.results = {{"value", 0.5}};
  const std::vector<ReportRecord> records{sample_record(1, 0.5), odd};
  CHECK_THROWS_AS(report::emit(records, Format::Csv), std::logic_error);
}
