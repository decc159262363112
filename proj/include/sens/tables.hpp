#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sens/effect_size.hpp"
#include "sens/sensitiveness.hpp"

namespace sens {

// One (test, benchmark size) cell of the reference sample-size tables.
struct TableRow {
  std::string test_label;  // "t", "chi2(3)", "F(2,dfd)"
  std::string size;        // "small", "medium", "large"
  TestSpec test;
  EffectSize target_es = EffectSize::d(0.0);
  std::int64_t n_sns = 0;  // minimum N for significance of the target MES
  std::int64_t n_pwr = 0;  // minimum N for 80% power at the target ES
  double critical_value = 0.0;
  DegreesOfFreedom df;     // of the critical value at n_sns
  EffectSize actual_es = EffectSize::d(0.0);

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

// Decimals at which the achieved MES is compared with the target.
inline constexpr int kTableReportDecimals = 4;
// Decimals at which V-metric targets are printed.
inline constexpr int kTableVTargetDecimals = 3;

// Sample sizes for sensitiveness and power, for Cohen's small, medium and
// large effects across 12 tests: t with r and d, χ² with 1..5 df, and
// one-way F with 2..6 groups. sig = α = .05, power .80, one-tailed.
// Produces 36 rows.
std::vector<TableRow> generate_table2();

// Target and achieved effect sizes with critical values for the t (d),
// χ² (w for 1 df, V(dfs) otherwise) and F families. Produces 33 rows.
std::vector<TableRow> generate_supp_table2();

}  // namespace sens
