#include <gtest/gtest.h>

#include <filesystem>

#include "hyperstate/hyperstate.hpp"

using namespace hyperstate;

namespace {

const ReproductionReport& report() {
  static const ReproductionReport r = [] {
    ReproduceOptions o;
    o.threads = 4;
    return reproduce(o);
  }();
  return r;
}

}  // namespace

TEST(Reproduce, NoGradedRowFails) {
  for (const auto& c : report().rows)
    EXPECT_NE(c.verdict, Verdict::Fail) << c.section << " / " << c.quantity << " ref " << c.reference.value_or(NAN)
                                        << " got " << c.computed.value_or(NAN);
  EXPECT_GT(report().count(Verdict::Pass), 100u);
}

TEST(Reproduce, KnownReferenceInconsistenciesAreFlagged) {
  std::size_t flagged = 0;
  for (const auto& c : report().rows)
    if (c.verdict == Verdict::Discrepancy) ++flagged;
  EXPECT_GE(flagged, 10u);
  for (const auto& c : report().rows) {
    if (c.section.find("claims") != std::string::npos && c.quantity.find("spectral radius") != std::string::npos) {
      EXPECT_EQ(c.verdict, Verdict::Discrepancy) << c.quantity;
    }
  }
}

TEST(Reproduce, GradingRules) {
  Comparison c;
  c.reference = 1.0;
  c.computed = 1.0005;
  c.tolerance = 1e-3;
  EXPECT_EQ(grade(c), Verdict::Pass);
  c.computed = 1.01;
  EXPECT_EQ(grade(c), Verdict::Fail);
  c.graded = false;
  EXPECT_EQ(grade(c), Verdict::Discrepancy);
  c.reference.reset();
  EXPECT_EQ(grade(c), Verdict::Info);
  Comparison bound;
  bound.reference = 1.0;
  bound.computed = 0.5;
  bound.relation = Relation::AtMost;
  EXPECT_EQ(grade(bound), Verdict::Pass);
}

TEST(Reproduce, PlotSeries) {
  const auto& series = report().series;
  const auto it = std::find_if(series.begin(), series.end(),
                               [](const PlotSeries& s) { return s.name.find("single") != std::string::npos; });
  ASSERT_NE(it, series.end());
  EXPECT_EQ(it->points.size(), 10u);
  EXPECT_EQ(it->points.front().first, 4);
  EXPECT_EQ(it->points.back().first, 13);

  const PlotSeries empty{"empty", "d", "y", {}};
  EXPECT_EQ(format_plot_data(empty), "# empty\n# d y\n");
  const auto dir = std::filesystem::temp_directory_path() / "hyperstate_plot_test";
  const auto files = emit_plot_data(series, dir);
  EXPECT_EQ(files.size(), series.size());
  for (const auto& f : files) EXPECT_TRUE(std::filesystem::exists(f));
  std::filesystem::remove_all(dir);
}

TEST(Reproduce, JsonReport) {
  const auto j = to_json(report());
  EXPECT_EQ(j["rows"].size(), report().rows.size());
  EXPECT_EQ(j["fail"], 0);
  EXPECT_EQ(j["pass"], report().count(Verdict::Pass));
}
