#include "sens/distributions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sens/errors.hpp"
#include "sens/special.hpp"

namespace sens {
namespace {

constexpr double kQuantileResidual = 1e-10;
constexpr int kMaxBracketSteps = 2000;
constexpr int kMaxRefineSteps = 400;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::int64_t checked_df(std::int64_t df, const char* what) {
  if (df < 1) throw DomainError(std::string(what) + ": degrees of freedom must be >= 1");
  return df;
}

// Lower and upper tail of Student's t.
struct TailPair {
  double lower;
  double upper;
};

TailPair student_tails(double nu, double x) {
  if (std::isnan(x)) throw DomainError("t cdf: x is NaN");
  if (x == 0.0) return {0.5, 0.5};
  if (std::isinf(x)) return x > 0 ? TailPair{1.0, 0.0} : TailPair{0.0, 1.0};
  const double x2 = x * x;
  double tail;
  if (x2 < nu) {
    // P(|T| < |x|) = I_{x²/(x²+ν)}(1/2, ν/2)
    const double inner = reg_inc_beta(0.5, 0.5 * nu, x2 / (x2 + nu), nu / (x2 + nu));
    tail = 0.5 * (1.0 - inner);
  } else {
    tail = 0.5 * reg_inc_beta(0.5 * nu, 0.5, nu / (x2 + nu), x2 / (x2 + nu));
  }
  return x > 0 ? TailPair{1.0 - tail, tail} : TailPair{tail, 1.0 - tail};
}

TailPair tails(const DistributionParams& params, double x) {
  return std::visit(
      Overloaded{
          [x](const StudentT& t) { return student_tails(static_cast<double>(t.df()), x); },
          [x](const ChiSquare& c) {
            if (std::isnan(x)) throw DomainError("chi-square cdf: x is NaN");
            if (x <= 0.0) return TailPair{0.0, 1.0};
            const double s = 0.5 * static_cast<double>(c.df());
            return TailPair{reg_inc_gamma_lower(s, 0.5 * x), reg_inc_gamma_upper(s, 0.5 * x)};
          },
          [x](const FisherF& f) {
            if (std::isnan(x)) throw DomainError("F cdf: x is NaN");
            if (x <= 0.0) return TailPair{0.0, 1.0};
            if (std::isinf(x)) return TailPair{1.0, 0.0};
            const double d1 = static_cast<double>(f.dfn());
            const double d2 = static_cast<double>(f.dfd());
            const double denom = d1 * x + d2;
            const double y = d1 * x / denom;
            const double one_minus_y = d2 / denom;
            return TailPair{reg_inc_beta(0.5 * d1, 0.5 * d2, y, one_minus_y),
                            reg_inc_beta(0.5 * d2, 0.5 * d1, one_minus_y, y)};
          },
      },
      params);
}

bool is_symmetric(const DistributionParams& params) {
  return std::holds_alternative<StudentT>(params);
}

}  // namespace

StudentT::StudentT(std::int64_t df) : df_(checked_df(df, "StudentT")) {}
ChiSquare::ChiSquare(std::int64_t df) : df_(checked_df(df, "ChiSquare")) {}
FisherF::FisherF(std::int64_t dfn, std::int64_t dfd)
    : dfn_(checked_df(dfn, "FisherF numerator")), dfd_(checked_df(dfd, "FisherF denominator")) {}

std::string describe(const DistributionParams& params) {
  return std::visit(
      Overloaded{
          [](const StudentT& t) { return "t(" + std::to_string(t.df()) + ")"; },
          [](const ChiSquare& c) { return "chi2(" + std::to_string(c.df()) + ")"; },
          [](const FisherF& f) {
            return "F(" + std::to_string(f.dfn()) + "," + std::to_string(f.dfd()) + ")";
          },
      },
      params);
}

double cdf(const DistributionParams& params, double x) { return tails(params, x).lower; }

double sf(const DistributionParams& params, double x) { return tails(params, x).upper; }

namespace detail {

double density(const DistributionParams& params, double x) {
  return std::visit(
      Overloaded{
          [x](const StudentT& t) {
            const double nu = static_cast<double>(t.df());
            const double log_norm = ln_gamma(0.5 * (nu + 1.0)) - ln_gamma(0.5 * nu) -
                                    0.5 * std::log(nu * std::numbers::pi);
            return std::exp(log_norm - 0.5 * (nu + 1.0) * std::log1p(x * x / nu));
          },
          [x](const ChiSquare& c) {
            if (x <= 0.0) return 0.0;
            const double k = 0.5 * static_cast<double>(c.df());
            return std::exp((k - 1.0) * std::log(x) - 0.5 * x - k * std::numbers::ln2 -
                            ln_gamma(k));
          },
          [x](const FisherF& f) {
            if (x <= 0.0) return 0.0;
            const double d1 = static_cast<double>(f.dfn());
            const double d2 = static_cast<double>(f.dfd());
            const double log_pdf = 0.5 * d1 * std::log(d1) + 0.5 * d2 * std::log(d2) +
                                   (0.5 * d1 - 1.0) * std::log(x) -
                                   0.5 * (d1 + d2) * std::log(d2 + d1 * x) -
                                   ln_beta(0.5 * d1, 0.5 * d2);
            return std::exp(log_pdf);
          },
      },
      params);
}

}  // namespace detail

double quantile(const DistributionParams& params, double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("quantile: p must lie in (0, 1)");
  const bool symmetric = is_symmetric(params);
  if (symmetric && p == 0.5) return 0.0;

  // Residual in whichever tail is smaller keeps precision for p near 1.
  const bool upper = p > 0.5;
  const double target = upper ? 1.0 - p : p;
  auto residual = [&](double x) {
    const TailPair tp = tails(params, x);
    return upper ? target - tp.upper : tp.lower - target;  // increasing in x
  };

  // Bracket [lo, hi] with residual(lo) <= 0 <= residual(hi).
  double lo;
  double hi;
  if (symmetric) {
    if (p > 0.5) {
      lo = 0.0;
      hi = 1.0;
      for (int i = 0; residual(hi) < 0.0; ++i) {
        if (i > kMaxBracketSteps) throw NumericError("quantile: bracket search failed");
        lo = hi;
        hi *= 2.0;
      }
    } else {
      hi = 0.0;
      lo = -1.0;
      for (int i = 0; residual(lo) > 0.0; ++i) {
        if (i > kMaxBracketSteps) throw NumericError("quantile: bracket search failed");
        hi = lo;
        lo *= 2.0;
      }
    }
  } else {
    lo = 0.0;
    hi = 1.0;
    for (int i = 0; residual(hi) < 0.0; ++i) {
      if (i > kMaxBracketSteps) throw NumericError("quantile: bracket search failed");
      lo = hi;
      hi *= 2.0;
    }
  }

  // Hybrid Newton / bisection inside the bracket.
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < kMaxRefineSteps; ++iter) {
    const double r = residual(x);
    if (r == 0.0) return x;
    if (r < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    const double width = hi - lo;
    if (width <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::fabs(lo), std::fabs(hi)) ||
        width < std::numeric_limits<double>::min()) {
      break;
    }
    const double pdf = detail::density(params, x);
    double next = (pdf > 0.0 && std::isfinite(pdf)) ? x - r / pdf : lo - 1.0;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - x) <= 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(x)) {
      x = next;
      break;
    }
    x = next;
  }
  if (std::fabs(residual(x)) > kQuantileResidual) {
    throw NumericError("quantile: refinement did not reach the residual tolerance for " +
                       describe(params));
  }
  return x;
}

}  // namespace sens
