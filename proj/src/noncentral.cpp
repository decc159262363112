#include "sens/noncentral.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <variant>

#include "sens/errors.hpp"
#include "sens/special.hpp"

namespace sens {
namespace {

constexpr double kWeightTol = 1e-14;
constexpr int kMaxTerms = 10000;

// Σ_j Poisson(j; mu) · term(j), summed outward from the mode.
double poisson_mixture(double mu, const std::function<double(double)>& term) {
  if (mu == 0.0) return term(0.0);
  const double mode = std::floor(mu);
  const double mode_weight = std::exp(-mu + mode * std::log(mu) - ln_gamma(mode + 1.0));

  double sum = 0.0;
  int used = 0;

  double weight = mode_weight;
  for (double j = mode;; j += 1.0) {
    sum += weight * term(j);
    if (++used > kMaxTerms) throw NumericError("noncentral series exceeded its term cap");
    // Geometric bound on the remaining upper tail once past the mean.
    if (j + 1.0 > mu && weight * (j + 1.0) / (j + 1.0 - mu) < kWeightTol) break;
    weight *= mu / (j + 1.0);
  }

  weight = mode_weight;
  for (double j = mode - 1.0; j >= 0.0; j -= 1.0) {
    weight *= (j + 1.0) / mu;
    sum += weight * term(j);
    if (++used > kMaxTerms) throw NumericError("noncentral series exceeded its term cap");
    if (weight * mu / (mu - j) < kWeightTol) break;
  }
  return sum;
}

// CDF of the noncentral t for x >= 0.
double noncentral_t_nonnegative(double nu, double delta, double x) {
  const double x2 = x * x;
  const double y = x2 / (x2 + nu);
  const double one_minus_y = nu / (x2 + nu);
  const double mu = 0.5 * delta * delta;
  const double half_nu = 0.5 * nu;

  double series = 0.0;
  if (y > 0.0) {
    if (mu == 0.0) {
      series = reg_inc_beta(0.5, half_nu, y, one_minus_y);
    } else {
      // p_j term: Poisson(j; mu) · I_y(j + 1/2, ν/2)
      series = poisson_mixture(mu, [&](double j) {
        return reg_inc_beta(j + 0.5, half_nu, y, one_minus_y);
      });
      // q_j term: δ/√2 · e^{-mu} mu^j / Γ(j + 3/2) · I_y(j + 1, ν/2),
      // written as Poisson(j; mu) · δ/√2 · Γ(j+1)/Γ(j+3/2) · I_y(j+1, ν/2).
      series += poisson_mixture(mu, [&](double j) {
        const double ratio = std::exp(ln_gamma(j + 1.0) - ln_gamma(j + 1.5));
        return delta / std::numbers::sqrt2 * ratio * reg_inc_beta(j + 1.0, half_nu, y, one_minus_y);
      });
    }
  }
  return normal_cdf(-delta) + 0.5 * series;
}

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

void check_lambda(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("noncentrality must be finite and nonnegative for chi-square and F");
  }
}

}  // namespace

double noncentral_cdf(const DistributionParams& params, Noncentrality nc, double x) {
  if (std::isnan(x)) throw DomainError("noncentral_cdf: x is NaN");
  if (const auto* t = std::get_if<StudentT>(&params)) {
    const double delta = nc.value;
    if (!std::isfinite(delta)) throw DomainError("noncentral t: delta must be finite");
    if (delta == 0.0) return cdf(params, x);
    if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
    const double nu = static_cast<double>(t->df());
    if (x >= 0.0) return clamp01(noncentral_t_nonnegative(nu, delta, x));
    return clamp01(1.0 - noncentral_t_nonnegative(nu, -delta, -x));
  }
  check_lambda(nc.value);
  if (nc.value == 0.0) return cdf(params, x);
  if (x <= 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  const double mu = 0.5 * nc.value;
  if (const auto* c = std::get_if<ChiSquare>(&params)) {
    const double half_k = 0.5 * static_cast<double>(c->df());
    return clamp01(poisson_mixture(mu, [&](double j) {
      return reg_inc_gamma_lower(half_k + j, 0.5 * x);
    }));
  }
  const auto& f = std::get<FisherF>(params);
  const double d1 = static_cast<double>(f.dfn());
  const double d2 = static_cast<double>(f.dfd());
  const double denom = d1 * x + d2;
  const double y = d1 * x / denom;
  const double one_minus_y = d2 / denom;
  return clamp01(poisson_mixture(mu, [&](double j) {
    return reg_inc_beta(0.5 * d1 + j, 0.5 * d2, y, one_minus_y);
  }));
}

double noncentral_sf(const DistributionParams& params, Noncentrality nc, double x) {
  if (nc.value == 0.0) return sf(params, x);
  return 1.0 - noncentral_cdf(params, nc, x);
}

}  // namespace sens
