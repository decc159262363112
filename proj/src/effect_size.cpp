#include "sens/effect_size.hpp"

#include <cmath>

#include "sens/errors.hpp"

namespace sens {

std::string to_string(Metric metric) {
  switch (metric) {
    case Metric::R: return "r";
    case Metric::D: return "d";
    case Metric::W: return "w";
    case Metric::V: return "V";
    case Metric::F: return "f";
  }
  return "?";
}

EffectSize::EffectSize(Metric metric, double value, std::int64_t dfs)
    : metric_(metric), value_(value), dfs_(dfs) {
  if (!std::isfinite(value) || value < 0.0) {
    throw DomainError("effect size must be finite and nonnegative");
  }
  if (metric == Metric::R && value > 1.0) throw DomainError("effect size r cannot exceed 1");
  if (metric == Metric::V && dfs < 1) throw DomainError("effect size V needs dfs >= 1");
  if (metric != Metric::V && dfs != 0) throw DomainError("only V carries dfs");
}

EffectSize EffectSize::r(double value) { return {Metric::R, value, 0}; }
EffectSize EffectSize::d(double value) { return {Metric::D, value, 0}; }
EffectSize EffectSize::w(double value) { return {Metric::W, value, 0}; }
EffectSize EffectSize::v(double value, std::int64_t dfs) { return {Metric::V, value, dfs}; }
EffectSize EffectSize::f(double value) { return {Metric::F, value, 0}; }
EffectSize EffectSize::of(Metric metric, double value, std::int64_t dfs) {
  return {metric, value, dfs};
}

std::string EffectSize::label() const {
  if (metric_ == Metric::V) return "V(" + std::to_string(dfs_) + ")";
  return to_string(metric_);
}

double CohenBenchmarks::at(int size_index) const {
  switch (size_index) {
    case 0: return small;
    case 1: return medium;
    case 2: return large;
  }
  throw DomainError("benchmark size index must be 0, 1 or 2");
}

CohenBenchmarks cohen_benchmarks(Metric metric) {
  switch (metric) {
    case Metric::R:
    case Metric::W:
    case Metric::V: return {metric, 0.10, 0.30, 0.50};
    case Metric::D: return {metric, 0.20, 0.50, 0.80};
    case Metric::F: return {metric, 0.10, 0.25, 0.40};
  }
  throw DomainError("unknown metric");
}

EffectSize d_from_t(double t, std::int64_t df) {
  if (df < 1) throw DomainError("d_from_t: df must be >= 1");
  return EffectSize::d(std::fabs(2.0 * t / std::sqrt(static_cast<double>(df))));
}

EffectSize r_from_t(double t, std::int64_t df) {
  if (df < 1) throw DomainError("r_from_t: df must be >= 1");
  return EffectSize::r(std::fabs(t) / std::sqrt(t * t + static_cast<double>(df)));
}

EffectSize w_from_chi2(double chi2, std::int64_t n) {
  if (n < 1) throw DomainError("w_from_chi2: n must be >= 1");
  if (!(chi2 >= 0.0)) throw DomainError("w_from_chi2: chi2 must be nonnegative");
  return EffectSize::w(std::sqrt(chi2 / static_cast<double>(n)));
}

EffectSize v_from_chi2(double chi2, std::int64_t n, std::int64_t dfs) {
  if (n < 1) throw DomainError("v_from_chi2: n must be >= 1");
  if (dfs < 1) throw DomainError("v_from_chi2: dfs must be >= 1");
  if (!(chi2 >= 0.0)) throw DomainError("v_from_chi2: chi2 must be nonnegative");
  return EffectSize::v(std::sqrt(chi2 / (static_cast<double>(n) * static_cast<double>(dfs))), dfs);
}

EffectSize f_from_F(double F, std::int64_t dfn, std::int64_t dfd) {
  if (dfn < 1 || dfd < 1) throw DomainError("f_from_F: dfn and dfd must be >= 1");
  if (!(F >= 0.0)) throw DomainError("f_from_F: F must be nonnegative");
  return EffectSize::f(std::sqrt(static_cast<double>(dfn) * F / static_cast<double>(dfd)));
}

double d_from_r(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("d_from_r: r must lie in [0, 1)");
  return 2.0 * r / std::sqrt(1.0 - r * r);
}

}  // namespace sens
