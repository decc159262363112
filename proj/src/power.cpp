#include "sens/power.hpp"

#include <cmath>
#include <string>

#include "sens/errors.hpp"

namespace sens {
namespace {

constexpr std::int64_t kMaxSearchN = std::int64_t{1} << 40;

double standardized_mean_difference(const PowerSpec& spec) {
  const EffectSize& es = spec.population_es;
  return es.metric() == Metric::R ? d_from_r(es.value()) : es.value();
}

double goodness_of_fit_w(const EffectSize& es) {
  return es.metric() == Metric::V ? es.value() * std::sqrt(static_cast<double>(es.dfs()))
                                  : es.value();
}

DegreesOfFreedom df_of(const DistributionParams& null) {
  if (const auto* t = std::get_if<StudentT>(&null)) return {t->df(), {}};
  if (const auto* c = std::get_if<ChiSquare>(&null)) return {c->df(), {}};
  const auto& f = std::get<FisherF>(null);
  return {f.dfn(), f.dfd()};
}

}  // namespace

void PowerSpec::validate() const {
  test.validate();
  test.check_metric(population_es.spec());
  if (!(target_power > 0.0 && target_power < 1.0)) {
    throw SpecError("target power must lie strictly between 0 and 1");
  }
}

Noncentrality noncentrality_at_n(const PowerSpec& spec, std::int64_t n) {
  const double nn = static_cast<double>(n);
  if (spec.test.is_t_family()) {
    const double n1 = static_cast<double>((n + 1) / 2);
    const double n2 = static_cast<double>(n / 2);
    return {standardized_mean_difference(spec) * std::sqrt(n1 * n2 / nn)};
  }
  if (std::holds_alternative<Chi2GoF>(spec.test.family)) {
    const double w = goodness_of_fit_w(spec.population_es);
    return {nn * w * w};
  }
  const double f = spec.population_es.value();
  return {nn * f * f};
}

double power_at_n(const PowerSpec& spec, std::int64_t n) {
  spec.test.validate();
  spec.test.check_metric(spec.population_es.spec());
  const DistributionParams null = spec.test.null_distribution(n);
  const double alpha = spec.test.sig;
  const Noncentrality nc = noncentrality_at_n(spec, n);
  if (spec.test.two_tailed()) {
    const double cv = quantile(null, 1.0 - alpha / 2.0);
    return noncentral_sf(null, nc, cv) + noncentral_cdf(null, nc, -cv);
  }
  const double cv = quantile(null, 1.0 - alpha);
  return noncentral_sf(null, nc, cv);
}

std::int64_t allocation_step(const TestSpec& test, Allocation allocation) {
  if (allocation == Allocation::Unrestricted) return 1;
  if (std::holds_alternative<TTwoSample>(test.family)) return 2;
  if (const auto* f = std::get_if<OneWayF>(&test.family)) return f->groups;
  return 1;
}

PowerResult min_n_for_power(const PowerSpec& spec, Allocation allocation) {
  spec.validate();
  if (spec.population_es.value() <= 0.0) {
    throw DomainError("min_n_for_power: population effect size must be positive");
  }
  const std::int64_t step = allocation_step(spec.test, allocation);
  const std::int64_t floor = spec.test.df_floor();
  // Totals are step * m, m >= first.
  const std::int64_t first = (floor + step - 1) / step;
  auto enough = [&](std::int64_t m) { return power_at_n(spec, m * step) >= spec.target_power; };

  std::int64_t m_hit = first;
  if (!enough(first)) {
    std::int64_t lo = first;
    std::int64_t hi = 2 * first;
    while (!enough(hi)) {
      lo = hi;
      hi *= 2;
      if (hi * step > kMaxSearchN) {
        throw NumericError("min_n_for_power: no N up to 2^40 reaches the target power");
      }
    }
    while (hi - lo > 1) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      if (enough(mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    m_hit = hi;
  }

  PowerResult out;
  out.n = m_hit * step;
  out.power = power_at_n(spec, out.n);
  const DistributionParams null = spec.test.null_distribution(out.n);
  out.critical_value =
      quantile(null, spec.test.two_tailed() ? 1.0 - spec.test.sig / 2.0 : 1.0 - spec.test.sig);
  out.noncentrality = noncentrality_at_n(spec, out.n);
  out.df = df_of(null);
  return out;
}

}  // namespace sens
