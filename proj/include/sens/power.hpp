#pragma once

#include <cstdint>

#include "sens/effect_size.hpp"
#include "sens/noncentral.hpp"
#include "sens/sensitiveness.hpp"

namespace sens {

// Neyman-Pearson power analysis. The test's sig doubles as α.
struct PowerSpec {
  TestSpec test;
  EffectSize population_es = EffectSize::d(0.5);
  double target_power = 0.80;

  void validate() const;
};

// How total sample sizes are enumerated by min_n_for_power.
enum class Allocation {
  // Total N is a multiple of the number of groups (t: 2, ANOVA: k), so every
  // group has the same size. This is what G*Power-style tables report.
  Balanced,
  // Any total N; unequal two-group splits use ceil(N/2) and floor(N/2).
  Unrestricted,
};

// Noncentrality of the test statistic at total N:
// t: δ = d·√(n1·n2/N) (r converted through d = 2r/√(1-r²)); χ²: λ = N·w²; F: λ = N·f².
Noncentrality noncentrality_at_n(const PowerSpec& spec, std::int64_t n);

// P(statistic beyond the critical value | alternative), strict exceedance.
double power_at_n(const PowerSpec& spec, std::int64_t n);

struct PowerResult {
  std::int64_t n = 0;
  double power = 0.0;
  double critical_value = 0.0;
  Noncentrality noncentrality;
  DegreesOfFreedom df;

  friend bool operator==(const PowerResult&, const PowerResult&) = default;
};

// Smallest N (respecting the allocation) with power_at_n >= target_power.
PowerResult min_n_for_power(const PowerSpec& spec, Allocation allocation = Allocation::Balanced);

// Step between admissible totals under the allocation.
std::int64_t allocation_step(const TestSpec& test, Allocation allocation);

}  // namespace sens
