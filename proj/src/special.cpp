#include "sens/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sens/errors.hpp"

namespace sens {
namespace {

constexpr int kMaxContinuedFractionIterations = 500;
constexpr int kMaxSeriesIterations = 100000;
constexpr double kRelTol = 1e-14;
constexpr double kTiny = 1e-300;

// Stirling correction terms B_2k / (2k (2k-1)), k = 1..8.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,           -1.0 / 360.0,     1.0 / 1260.0,  -1.0 / 1680.0,
    1.0 / 1188.0,         -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0,
};

double stirling_series(double z) {
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  double series = 0.0;
  double power = inv;
  for (double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  return series;
}

double stirling_ln_gamma(double z) {
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + stirling_series(z);
}

// Modified Lentz evaluation of the incomplete beta continued fraction.
double beta_continued_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxContinuedFractionIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kRelTol) return h;
  }
  throw NumericError("incomplete beta continued fraction did not converge (a=" +
                     std::to_string(a) + ", b=" + std::to_string(b) +
                     ", x=" + std::to_string(x) + ")");
}

double gamma_prefactor(double s, double x) {
  return std::exp(-x + s * std::log(x) - ln_gamma(s));
}

double gamma_series(double s, double x) {
  double ap = s;
  double del = 1.0 / s;
  double sum = del;
  for (int n = 0; n < kMaxSeriesIterations; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * kRelTol) return sum * gamma_prefactor(s, x);
  }
  throw NumericError("incomplete gamma series did not converge (s=" + std::to_string(s) +
                     ", x=" + std::to_string(x) + ")");
}

double gamma_continued_fraction(double s, double x) {
  double b = x + 1.0 - s;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxContinuedFractionIterations; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kRelTol) return h * gamma_prefactor(s, x);
  }
  throw NumericError("incomplete gamma continued fraction did not converge (s=" +
                     std::to_string(s) + ", x=" + std::to_string(x) + ")");
}

void check_gamma_args(double s, double x) {
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("incomplete gamma: s must be positive");
  if (!(x >= 0.0) || std::isnan(x)) throw DomainError("incomplete gamma: x must be nonnegative");
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("ln_gamma: argument must be positive and finite");
  }
  if (x >= 10.0) return stirling_ln_gamma(x);
  // Shift into the Stirling range: Γ(x) = Γ(x + n) / (x (x+1) ... (x+n-1)).
  double product = 1.0;
  double log_shift = 0.0;
  while (x < 10.0) {
    product *= x;
    if (product < 1e-250) {
      log_shift += std::log(product);
      product = 1.0;
    }
    x += 1.0;
  }
  return stirling_ln_gamma(x) - std::log(product) - log_shift;
}

double ln_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("ln_beta: arguments must be positive");
  const double small = std::min(a, b);
  const double big = std::max(a, b);
  if (big < 10.0) return ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b);
  // ln Γ(big) - ln Γ(small + big) from the Stirling expansion, arranged so
  // that no two terms of size ~big cancel.
  const double ratio = small / big;
  const double diff = -small * std::log(big) - (small + big - 0.5) * std::log1p(ratio) + small +
                      stirling_series(big) - stirling_series(small + big);
  return ln_gamma(small) + diff;
}

double reg_inc_beta(double a, double b, double x) { return reg_inc_beta(a, b, x, 1.0 - x); }

double reg_inc_beta(double a, double b, double x, double y) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("reg_inc_beta: a and b must be positive");
  }
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("reg_inc_beta: x must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  if (y == 0.0 || x == 1.0) return 1.0;
  const double front = std::exp(a * std::log(x) + b * std::log(y) - ln_beta(a, b));
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, y) / b;
}

double reg_inc_gamma_lower(double s, double x) {
  check_gamma_args(s, x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < s + 1.0) return gamma_series(s, x);
  return 1.0 - gamma_continued_fraction(s, x);
}

double reg_inc_gamma_upper(double s, double x) {
  check_gamma_args(s, x);
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < s + 1.0) return 1.0 - gamma_series(s, x);
  return gamma_continued_fraction(s, x);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

}  // namespace sens
