#include "sens/sensitiveness.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sens/errors.hpp"
#include "sens/rounding.hpp"

namespace sens {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr std::int64_t kMaxSearchN = std::int64_t{1} << 40;

struct RawMes {
  double critical_value;
  double value;
  DegreesOfFreedom df;
};

RawMes raw_mes(const TestSpec& spec, std::int64_t n, const MetricSpec& metric) {
  const DistributionParams null = spec.null_distribution(n);
  const double upper = spec.two_tailed() ? 1.0 - spec.sig / 2.0 : 1.0 - spec.sig;
  const double cv = quantile(null, upper);
  return std::visit(
      Overloaded{
          [&](const StudentT& t) {
            const double df = static_cast<double>(t.df());
            const double value = metric.metric == Metric::D ? 2.0 * cv / std::sqrt(df)
                                                            : cv / std::sqrt(cv * cv + df);
            return RawMes{cv, value, {t.df(), {}}};
          },
          [&](const ChiSquare& c) {
            const double nn = static_cast<double>(n);
            const double value = metric.metric == Metric::W
                                     ? std::sqrt(cv / nn)
                                     : std::sqrt(cv / (nn * static_cast<double>(metric.dfs)));
            return RawMes{cv, value, {c.df(), {}}};
          },
          [&](const FisherF& f) {
            const double value =
                std::sqrt(static_cast<double>(f.dfn()) * cv / static_cast<double>(f.dfd()));
            return RawMes{cv, value, {f.dfn(), f.dfd()}};
          },
      },
      null);
}

double metric_ceiling(const TestSpec& spec, const MetricSpec& metric) {
  switch (metric.metric) {
    case Metric::R:
    case Metric::V: return 1.0;
    case Metric::W: return std::sqrt(static_cast<double>(std::get<Chi2GoF>(spec.family).df));
    default: return std::numeric_limits<double>::infinity();
  }
}

}  // namespace

TestSpec TestSpec::t_two_sample(double sig, Tails tails) { return {TTwoSample{}, tails, sig}; }
TestSpec TestSpec::point_biserial(double sig, Tails tails) {
  return {PointBiserialR{}, tails, sig};
}
TestSpec TestSpec::chi2_gof(std::int64_t df, double sig) { return {Chi2GoF{df}, Tails::One, sig}; }
TestSpec TestSpec::one_way_f(std::int64_t groups, double sig) {
  return {OneWayF{groups}, Tails::One, sig};
}

void TestSpec::validate() const {
  if (!(sig > 0.0 && sig <= 0.5)) throw SpecError("sig must lie in (0, 0.5]");
  if (const auto* c = std::get_if<Chi2GoF>(&family); c && c->df < 1) {
    throw SpecError("chi-square df must be >= 1");
  }
  if (const auto* f = std::get_if<OneWayF>(&family); f && f->groups < 2) {
    throw SpecError("one-way F needs at least 2 groups");
  }
  if (!is_t_family() && tails == Tails::Two) {
    throw SpecError("chi-square and F tests are one-tailed");
  }
}

bool TestSpec::is_t_family() const {
  return std::holds_alternative<TTwoSample>(family) ||
         std::holds_alternative<PointBiserialR>(family);
}

std::int64_t TestSpec::df_floor() const {
  return std::visit(Overloaded{
                        [](const TTwoSample&) -> std::int64_t { return 3; },
                        [](const PointBiserialR&) -> std::int64_t { return 3; },
                        [](const Chi2GoF&) -> std::int64_t { return 1; },
                        [](const OneWayF& f) -> std::int64_t { return f.groups + 1; },
                    },
                    family);
}

std::int64_t TestSpec::groups() const {
  return std::visit(Overloaded{
                        [](const TTwoSample&) -> std::int64_t { return 2; },
                        [](const PointBiserialR&) -> std::int64_t { return 2; },
                        [](const Chi2GoF&) -> std::int64_t { return 1; },
                        [](const OneWayF& f) -> std::int64_t { return f.groups; },
                    },
                    family);
}

Metric TestSpec::natural_metric() const {
  return std::visit(Overloaded{
                        [](const TTwoSample&) { return Metric::D; },
                        [](const PointBiserialR&) { return Metric::R; },
                        [](const Chi2GoF&) { return Metric::W; },
                        [](const OneWayF&) { return Metric::F; },
                    },
                    family);
}

void TestSpec::check_metric(const MetricSpec& metric) const {
  const Metric m = metric.metric;
  const bool ok = std::visit(Overloaded{
                                 [m](const TTwoSample&) { return m == Metric::D || m == Metric::R; },
                                 [m](const PointBiserialR&) { return m == Metric::D || m == Metric::R; },
                                 [m](const Chi2GoF&) { return m == Metric::W || m == Metric::V; },
                                 [m](const OneWayF&) { return m == Metric::F; },
                             },
                             family);
  if (!ok) throw SpecError("effect size metric " + to_string(m) + " does not apply to " + label());
  if (m == Metric::V && metric.dfs < 1) throw SpecError("V needs dfs >= 1");
}

DistributionParams TestSpec::null_distribution(std::int64_t n) const {
  const std::int64_t floor = df_floor();
  if (n < floor) {
    throw DomainError(label() + " needs N >= " + std::to_string(floor) + " (got " +
                      std::to_string(n) + ")");
  }
  return std::visit(Overloaded{
                        [n](const TTwoSample&) -> DistributionParams { return StudentT(n - 2); },
                        [n](const PointBiserialR&) -> DistributionParams { return StudentT(n - 2); },
                        [](const Chi2GoF& c) -> DistributionParams { return ChiSquare(c.df); },
                        [n](const OneWayF& f) -> DistributionParams {
                          return FisherF(f.groups - 1, n - f.groups);
                        },
                    },
                    family);
}

std::string TestSpec::label() const {
  return std::visit(
      Overloaded{
          [](const TTwoSample&) -> std::string { return "t (independent groups)"; },
          [](const PointBiserialR&) -> std::string { return "t (point-biserial r)"; },
          [](const Chi2GoF& c) -> std::string { return "chi2(" + std::to_string(c.df) + ")"; },
          [](const OneWayF& f) -> std::string {
            return "F(" + std::to_string(f.groups - 1) + ",dfd), " + std::to_string(f.groups) +
                   " groups";
          },
      },
      family);
}

MesAtN mes_at_n(const TestSpec& spec, std::int64_t n, std::optional<MetricSpec> metric) {
  spec.validate();
  const MetricSpec m = metric.value_or(MetricSpec{spec.natural_metric(), 0});
  spec.check_metric(m);
  const RawMes raw = raw_mes(spec, n, m);
  MesAtN out;
  out.n = n;
  out.critical_value = raw.critical_value;
  out.mes = EffectSize::of(m.metric, raw.value, m.metric == Metric::V ? m.dfs : 0);
  out.df = raw.df;
  out.attainable = raw.value <= metric_ceiling(spec, m);
  return out;
}

SensitivenessResult min_sample_size(const TestSpec& spec, const EffectSize& target,
                                    const SolveOptions& options) {
  spec.validate();
  spec.check_metric(target.spec());
  if (!(target.value() > 0.0)) throw DomainError("target effect size must be positive");

  const MetricSpec metric = target.spec();
  auto reported = [&](double v) {
    return options.report_decimals ? round_to(v, *options.report_decimals) : v;
  };
  auto accepts = [&](std::int64_t n) {
    return reported(raw_mes(spec, n, metric).value) <= target.value();
  };

  const std::int64_t floor = spec.df_floor();
  std::int64_t n_min = floor;
  bool at_floor = accepts(floor);
  if (!at_floor) {
    // accepts(lo) is false, accepts(hi) is true.
    std::int64_t lo = floor;
    std::int64_t hi = std::max<std::int64_t>(2 * floor, floor + 1);
    while (!accepts(hi)) {
      lo = hi;
      hi *= 2;
      if (hi > kMaxSearchN) {
        throw NumericError("min_sample_size: no N up to 2^40 reaches the target effect size");
      }
    }
    while (hi - lo > 1) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      if (accepts(mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    n_min = hi;
  }

  const RawMes raw = raw_mes(spec, n_min, metric);
  SensitivenessResult out;
  out.n_min = n_min;
  out.critical_value = raw.critical_value;
  out.achieved_mes = EffectSize::of(metric.metric, raw.value, metric.dfs);
  out.df = raw.df;
  out.at_df_floor = at_floor;
  out.equal_split = !std::holds_alternative<TTwoSample>(spec.family) || n_min % 2 == 0;
  out.two_tailed = spec.two_tailed();
  return out;
}

double post_hoc_sensitiveness(std::int64_t n_actual, std::int64_t n_min) {
  if (n_min < 1) throw DomainError("post_hoc_sensitiveness: n_min must be >= 1");
  if (n_actual < 1) throw DomainError("post_hoc_sensitiveness: n_actual must be >= 1");
  return 100.0 * (static_cast<double>(n_actual) / static_cast<double>(n_min) - 1.0);
}

}  // namespace sens
