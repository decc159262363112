#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "sens/distributions.hpp"
#include "sens/effect_size.hpp"

namespace sens {

// Two independent groups, equal allocation, t on N - 2 df.
struct TTwoSample {
  friend bool operator==(const TTwoSample&, const TTwoSample&) = default;
};
// Point-biserial correlation, t on N - 2 df.
struct PointBiserialR {
  friend bool operator==(const PointBiserialR&, const PointBiserialR&) = default;
};
// Chi-square goodness of fit with a fixed df.
struct Chi2GoF {
  std::int64_t df = 1;
  friend bool operator==(const Chi2GoF&, const Chi2GoF&) = default;
};
// One-way ANOVA over k groups: F on (k - 1, N - k) df.
struct OneWayF {
  std::int64_t groups = 2;
  friend bool operator==(const OneWayF&, const OneWayF&) = default;
};

using TestFamily = std::variant<TTwoSample, PointBiserialR, Chi2GoF, OneWayF>;

enum class Tails { One, Two };

struct TestSpec {
  TestFamily family = TTwoSample{};
  Tails tails = Tails::One;  // only meaningful for the t family
  double sig = 0.05;

  static TestSpec t_two_sample(double sig = 0.05, Tails tails = Tails::One);
  static TestSpec point_biserial(double sig = 0.05, Tails tails = Tails::One);
  static TestSpec chi2_gof(std::int64_t df, double sig = 0.05);
  static TestSpec one_way_f(std::int64_t groups, double sig = 0.05);

  // Throws SpecError on df < 1, k < 2 or sig outside (0, 0.5].
  void validate() const;
  bool is_t_family() const;
  bool two_tailed() const { return is_t_family() && tails == Tails::Two; }
  // Smallest total N with positive error df: 3 for t, k + 1 for F, 1 for χ².
  std::int64_t df_floor() const;
  // Number of equal groups the total N is split into (1 for χ²).
  std::int64_t groups() const;
  // Default effect-size metric of the family (d, r, w, f).
  Metric natural_metric() const;
  // Throws SpecError when the metric does not belong to the family.
  void check_metric(const MetricSpec& metric) const;
  // Null distribution of the test statistic at total sample size n.
  DistributionParams null_distribution(std::int64_t n) const;
  std::string label() const;

  friend bool operator==(const TestSpec&, const TestSpec&) = default;
};

struct DegreesOfFreedom {
  std::int64_t df1 = 0;
  std::optional<std::int64_t> df2;  // F only
  friend bool operator==(const DegreesOfFreedom&, const DegreesOfFreedom&) = default;
};

// Critical value and minimum effect size at one sample size.
struct MesAtN {
  std::int64_t n = 0;
  double critical_value = 0.0;
  EffectSize mes = EffectSize::d(0.0);
  DegreesOfFreedom df;
  // False when the MES exceeds the largest value the metric can take
  // (r and V above 1, w above √df): nothing is detectable at this N.
  bool attainable = true;

  friend bool operator==(const MesAtN&, const MesAtN&) = default;
};

struct SensitivenessResult {
  std::int64_t n_min = 0;
  double critical_value = 0.0;
  EffectSize achieved_mes = EffectSize::d(0.0);
  DegreesOfFreedom df;
  // The smallest admissible N already satisfies the target.
  bool at_df_floor = false;
  // TTwoSample only: false when n_min is odd and cannot be split equally.
  bool equal_split = true;
  bool two_tailed = false;

  friend bool operator==(const SensitivenessResult&, const SensitivenessResult&) = default;
};

struct SolveOptions {
  // When set, the achieved MES is rounded half away from zero at this many
  // decimals before comparison with the target, which is how printed
  // sample-size tables decide acceptance.
  std::optional<int> report_decimals;
};

// Critical value at 1 - sig (1 - sig/2 for two-tailed t) and the MES it
// implies. `metric` defaults to the family's natural metric.
MesAtN mes_at_n(const TestSpec& spec, std::int64_t n, std::optional<MetricSpec> metric = {});

// Smallest total N whose MES is at or below the target.
SensitivenessResult min_sample_size(const TestSpec& spec, const EffectSize& target,
                                    const SolveOptions& options = {});

// 100 · (n_actual / n_min - 1)
double post_hoc_sensitiveness(std::int64_t n_actual, std::int64_t n_min);

}  // namespace sens
