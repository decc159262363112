#include <gtest/gtest.h>

#include <cmath>

#include "sens/analysis.hpp"
#include "sens/errors.hpp"
#include "sens/rounding.hpp"

using namespace sens;

TEST(PairwiseGof, TableOneValues) {
  const auto a = pairwise_gof(158, 149);
  EXPECT_NEAR(a.chi2, 0.26, 0.005);
  EXPECT_NEAR(a.w, 0.03, 0.005);
  EXPECT_NEAR(a.p, 0.61, 0.005);
  const auto b = pairwise_gof(149, 122);
  EXPECT_NEAR(b.chi2, 2.69, 0.005);
  EXPECT_NEAR(b.w, 0.10, 0.005);
  EXPECT_NEAR(b.p, 0.10, 0.005);
  const auto c = pairwise_gof(122, 158);
  EXPECT_NEAR(c.chi2, 4.63, 0.005);
  EXPECT_NEAR(c.w, 0.13, 0.005);
  EXPECT_NEAR(c.p, 0.03, 0.005);
}

TEST(PairwiseGof, ClosedForm) {
  const auto r = pairwise_gof(17, 20, "PWR-SNS");
  EXPECT_EQ(r.label, "PWR-SNS");
  EXPECT_DOUBLE_EQ(r.chi2, 9.0 / 37.0);
  EXPECT_DOUBLE_EQ(r.w, std::sqrt(9.0 / 37.0 / 37.0));
  // χ²(1) upper tail = erfc(√(x/2)).
  EXPECT_NEAR(r.p, std::erfc(std::sqrt(r.chi2 / 2.0)), 1e-14);
}

TEST(PairwiseGof, EqualCountsAndSymmetry) {
  for (std::int64_t x : {1, 5, 300}) {
    const auto r = pairwise_gof(x, x);
    EXPECT_EQ(r.chi2, 0.0);
    EXPECT_EQ(r.w, 0.0);
    EXPECT_EQ(r.p, 1.0);
  }
  for (std::int64_t a = 0; a < 30; ++a) {
    for (std::int64_t b = 0; b < 30; ++b) {
      if (a + b == 0) continue;
      const auto l = pairwise_gof(a, b), r = pairwise_gof(b, a);
      EXPECT_EQ(l.chi2, r.chi2);
      EXPECT_EQ(l.w, r.w);
      EXPECT_EQ(l.p, r.p);
      EXPECT_GE(l.w, 0.0);
      EXPECT_LE(l.w, 1.0);
      EXPECT_EQ(l.chi2 == 0.0, a == b);
    }
  }
  EXPECT_DOUBLE_EQ(pairwise_gof(0, 9).w, 1.0);
  EXPECT_THROW(pairwise_gof(0, 0), DegenerateInputError);
  EXPECT_THROW(pairwise_gof(-1, 3), DomainError);
}

TEST(ConditionShares, PrintedPercentages) {
  const auto s = condition_shares({{"PWR", 17}, {"SNS", 20}, {"THMB", 10}});
  EXPECT_NEAR(s[0].second, 36.2, 0.05);
  EXPECT_NEAR(s[1].second, 42.6, 0.05);
  EXPECT_NEAR(s[2].second, 21.3, 0.05);
  const auto t = condition_shares({{"PWR", 158}, {"SNS", 149}, {"THMB", 122}});
  EXPECT_NEAR(t[0].second, 36.8, 0.05);
  EXPECT_NEAR(t[1].second, 34.7, 0.05);
  EXPECT_NEAR(t[2].second, 28.4, 0.05);
  const auto e = condition_shares({{"A", 4}, {"B", 4}});
  EXPECT_EQ(e[0].second, 50.0);
  EXPECT_EQ(e[1].second, 50.0);
  EXPECT_THROW(condition_shares({{"A", 0}, {"B", 0}}), DegenerateInputError);
}

TEST(CyclicPairs, Layout) {
  using P = std::vector<std::pair<std::size_t, std::size_t>>;
  EXPECT_EQ(cyclic_pairs(2), (P{{0, 1}}));
  EXPECT_EQ(cyclic_pairs(3), (P{{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_TRUE(cyclic_pairs(1).empty());
}

namespace {

StudyOutcome outcome(int index, std::int64_t pwr, std::int64_t sns, std::int64_t thmb) {
  StudyOutcome o;
  o.study_index = index;
  o.counts = {{"PWR", pwr, 43}, {"SNS", sns, 40}, {"THMB", thmb, 30}};
  return o;
}

}  // namespace

TEST(Summarize, PerStudyAndAggregate) {
  const std::vector<StudyOutcome> outcomes{outcome(0, 17, 20, 10), outcome(1, 18, 21, 16)};
  const auto s = summarize(outcomes);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].label, "I");
  EXPECT_EQ(s[1].label, "II");
  EXPECT_EQ(s[2].label, "All studies");
  EXPECT_EQ(s[2].captures[0].second, 35);
  ASSERT_EQ(s[0].comparisons.size(), 3u);
  EXPECT_EQ(s[0].comparisons[0].label, "PWR-SNS");
  EXPECT_EQ(s[0].comparisons[2].label, "THMB-PWR");
  EXPECT_NEAR(s[0].comparisons[1].chi2, 3.33, 0.005);
}

TEST(Tables, CsvAndMarkdownLayouts) {
  const std::vector<StudyOutcome> outcomes{outcome(0, 17, 20, 10)};
  const std::string csv = simulation_table_csv(outcomes);
  EXPECT_NE(csv.find("Statistic,I,All studies"), std::string::npos);
  EXPECT_NE(csv.find("f PWR,17,17"), std::string::npos);
  EXPECT_NE(csv.find("% PWR,36.2,36.2"), std::string::npos);
  EXPECT_NE(csv.find("chi2 SNS-THMB,3.33,3.33"), std::string::npos);
  const std::string md = comparison_table_markdown(outcomes);
  EXPECT_NE(md.find("| PWR | 17 | 36.2 | PWR-SNS |"), std::string::npos);
  const std::string cmp = comparison_table_csv(outcomes);
  EXPECT_NE(cmp.find("PWR,17,36.2,PWR-SNS"), std::string::npos);
}
