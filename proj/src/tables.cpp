#include "sens/tables.hpp"

#include <cmath>

#include "sens/power.hpp"
#include "sens/rounding.hpp"

namespace sens {
namespace {

constexpr double kSig = 0.05;
constexpr double kPower = 0.80;

struct TableTest {
  std::string label;
  TestSpec spec;
  Metric metric;
};

std::vector<TableTest> table2_tests() {
  std::vector<TableTest> tests;
  tests.push_back({"t", TestSpec::point_biserial(kSig), Metric::R});
  tests.push_back({"t", TestSpec::t_two_sample(kSig), Metric::D});
  for (std::int64_t df = 1; df <= 5; ++df) {
    tests.push_back({"chi2(" + std::to_string(df) + ")", TestSpec::chi2_gof(df, kSig), Metric::W});
  }
  for (std::int64_t k = 2; k <= 6; ++k) {
    tests.push_back(
        {"F(" + std::to_string(k - 1) + ",dfd)", TestSpec::one_way_f(k, kSig), Metric::F});
  }
  return tests;
}

// χ² targets with more than one df are stated as V(df) = w/√df at the
// printed three decimals; the solver works on that printed target.
EffectSize sensitiveness_target(const TableTest& test, double benchmark) {
  if (const auto* c = std::get_if<Chi2GoF>(&test.spec.family); c && c->df > 1) {
    const double v = benchmark / std::sqrt(static_cast<double>(c->df));
    return EffectSize::v(round_to(v, kTableVTargetDecimals), c->df);
  }
  return EffectSize::of(test.metric, benchmark);
}

TableRow make_row(const TableTest& test, int size_index) {
  const double benchmark = cohen_benchmarks(test.metric).at(size_index);
  const EffectSize target = sensitiveness_target(test, benchmark);
  const SensitivenessResult sns =
      min_sample_size(test.spec, target, SolveOptions{kTableReportDecimals});
  const PowerSpec power{test.spec, EffectSize::of(test.metric, benchmark), kPower};
  const PowerResult pwr = min_n_for_power(power, Allocation::Balanced);

  TableRow row;
  row.test_label = test.label;
  row.size = kSizeLabels[size_index];
  row.test = test.spec;
  row.target_es = target;
  row.n_sns = sns.n_min;
  row.n_pwr = pwr.n;
  row.critical_value = sns.critical_value;
  row.df = sns.df;
  row.actual_es = sns.achieved_mes;
  return row;
}

}  // namespace

std::vector<TableRow> generate_table2() {
  std::vector<TableRow> rows;
  for (const TableTest& test : table2_tests()) {
    for (int size = 0; size < 3; ++size) rows.push_back(make_row(test, size));
  }
  return rows;
}

std::vector<TableRow> generate_supp_table2() {
  std::vector<TableRow> rows;
  for (const TableTest& test : table2_tests()) {
    if (test.metric == Metric::R) continue;
    for (int size = 0; size < 3; ++size) rows.push_back(make_row(test, size));
  }
  return rows;
}

}  // namespace sens
