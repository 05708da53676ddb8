#include "rwstab/sweep.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "rwstab/property_suite.hpp"
#include "rwstab/report.hpp"

namespace rwstab {
namespace {

SweepOptions range(int lo, int hi, unsigned jobs = 1) {
  SweepOptions o;
  o.n_min = lo;
  o.n_max = hi;
  o.jobs = jobs;
  return o;
}

std::string json_text(const SweepReport& r) {
  std::ostringstream out;
  write_json(out, r);
  return out.str();
}

TEST(SweepTest, CanonicalTriplesAreSortedAndComplete) {
  const auto t = canonical_triples(3, 12);
  EXPECT_TRUE(std::is_sorted(t.begin(), t.end()));
  std::size_t expected = 0;
  for (int n = 3; n <= 12; ++n) expected += static_cast<std::size_t>((n / 2) * (n / 2));
  EXPECT_EQ(t.size(), expected);
}

TEST(SweepTest, RangeValidation) {
  EXPECT_THROW(run_sweep(range(20, 3)), std::invalid_argument);
  EXPECT_THROW(run_sweep(range(2, 5)), std::invalid_argument);
  EXPECT_THROW(run_sweep(range(3, 5, 0)), std::invalid_argument);
}

TEST(SweepTest, ReportDoesNotDependOnJobs) {
  const auto one = run_sweep(range(3, 16, 1));
  const auto four = run_sweep(range(3, 16, 4));
  EXPECT_EQ(json_text(one), json_text(four));
}

TEST(SweepTest, NoViolationsUpToTwenty) {
  const auto report = verify_conjecture(20, 2);
  EXPECT_TRUE(report.summary.passed());
  EXPECT_EQ(report.n_range, std::make_pair(3, 20));
  for (const auto& rec : report.records) {
    if (rec.stable()) {
      EXPECT_EQ(rec.cdc_aut_order, 2 * rec.aut_order);
    } else {
      EXPECT_GT(rec.cdc_aut_order, 2 * rec.aut_order);
    }
  }
}

TEST(SweepTest, SummaryCountsAddUp) {
  const auto report = run_sweep(range(3, 12));
  std::size_t total = 0;
  for (const auto& [kind, count] : report.summary.counts) total += count;
  EXPECT_EQ(total, report.records.size());
}

TEST(SweepTest, IsoFallbackAgreesWithFlips) {
  auto o = range(3, 14);
  o.iso_fallback = true;
  const auto report = run_sweep(o);
  ASSERT_TRUE(report.summary.iso_discrepancies);
  EXPECT_TRUE(report.summary.iso_discrepancies->empty());
  for (const auto& rec : report.records) ASSERT_TRUE(rec.iso_families);
}

TEST(SweepTest, TinyTimeoutMarksRecords) {
  auto o = range(30, 30);
  o.timeout = std::chrono::duration<double>(1e-9);
  const auto report = run_sweep(o);
  EXPECT_EQ(report.summary.timeouts.size(), report.records.size());
  EXPECT_TRUE(report.summary.passed());
}

TEST(ReportTest, RecordFields) {
  const auto rec = analyze(RoseWindowParams::make(5, 4, 1));
  const auto j = record_to_json(rec);
  EXPECT_EQ(j.at("stability_kind"), "NontriviallyUnstable");
  EXPECT_EQ(j.at("families"), nlohmann::ordered_json::array({"W3"}));
  EXPECT_EQ(j.at("aut_order"), "20");
  EXPECT_EQ(j.at("cdc_aut_order"), "80");
  EXPECT_EQ(j.at("theorem_case"), "i");
  for (const char* key : {"n", "a", "r", "degenerate", "connected", "bipartite", "twin_count", "stable",
                          "reasons", "edge_orbits", "cdc_edge_transitive", "violations"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(ReportTest, CsvCarriesTheJsonFields) {
  const auto report = run_sweep(range(5, 8));
  std::ostringstream csv;
  write_csv(csv, report);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  std::string joined;
  for (std::size_t i = 0; i < csv_columns().size(); ++i) joined += (i ? "," : "") + csv_columns()[i];
  EXPECT_EQ(header, joined);
  const auto j = report_to_json(report);
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, j.at("records").size());
  for (const auto& rec : j.at("records")) {
    std::vector<std::string> keys;
    for (const auto& item : rec.items()) keys.push_back(item.key());
    EXPECT_EQ(keys, csv_columns());
  }
}

TEST(PropertySuiteTest, SmallRangeOnlyFailsTheTwoOrbitCriterion) {
  const auto result = run_property_suite(3, 12);
  for (const auto& c : result.checks) {
    EXPECT_GT(c.checked, 0u) << c.name;
    if (c.name != "two-orbit-criterion") EXPECT_TRUE(c.passed()) << c.name;
  }
  const auto it = std::find_if(result.checks.begin(), result.checks.end(),
                               [](const auto& c) { return c.name == "two-orbit-criterion"; });
  ASSERT_NE(it, result.checks.end());
  EXPECT_EQ(it->examples, std::vector<std::string>{"10:5:3"});
}

}  // namespace
}  // namespace rwstab
