#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace sens {

// Cohen effect-size metrics: point-biserial r, standardized mean difference
// d, goodness-of-fit w, Cramér's V (which carries its dfs) and ANOVA f.
enum class Metric { R, D, W, V, F };

std::string to_string(Metric metric);

// A metric together with the dfs a V carries.
struct MetricSpec {
  Metric metric = Metric::D;
  std::int64_t dfs = 0;
  friend bool operator==(const MetricSpec&, const MetricSpec&) = default;
};

class EffectSize {
 public:
  static EffectSize r(double value);
  static EffectSize d(double value);
  static EffectSize w(double value);
  static EffectSize v(double value, std::int64_t dfs);
  static EffectSize f(double value);
  static EffectSize of(Metric metric, double value, std::int64_t dfs = 0);

  Metric metric() const noexcept { return metric_; }
  double value() const noexcept { return value_; }
  // Smaller table dimension minus one; zero for every metric other than V.
  std::int64_t dfs() const noexcept { return dfs_; }
  MetricSpec spec() const noexcept { return {metric_, dfs_}; }

  // "d", "w", "V(2)", ...
  std::string label() const;

  friend bool operator==(const EffectSize&, const EffectSize&) = default;

 private:
  EffectSize(Metric metric, double value, std::int64_t dfs);

  Metric metric_;
  double value_;
  std::int64_t dfs_;
};

// Cohen's conventional small / medium / large values.
struct CohenBenchmarks {
  Metric metric;
  double small;
  double medium;
  double large;

  double at(int size_index) const;
};

CohenBenchmarks cohen_benchmarks(Metric metric);

inline constexpr std::array<const char*, 3> kSizeLabels = {"small", "medium", "large"};

// d = |2t / √df|
EffectSize d_from_t(double t, std::int64_t df);

// r = |t| / √(t² + df)
EffectSize r_from_t(double t, std::int64_t df);

// w = √(χ² / N)
EffectSize w_from_chi2(double chi2, std::int64_t n);

// V = √(χ² / (N · dfs)), so that w = V · √dfs.
EffectSize v_from_chi2(double chi2, std::int64_t n, std::int64_t dfs);

// f = √(dfn · F / dfd)
EffectSize f_from_F(double F, std::int64_t dfn, std::int64_t dfd);

// d = 2r / √(1 - r²), the two-group equivalent of a point-biserial r.
double d_from_r(double r);

}  // namespace sens
