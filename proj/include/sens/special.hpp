#pragma once

// Special functions behind the t, chi-square and F distributions.
//
// All functions throw sens::DomainError for arguments outside their domain
// and sens::NumericError when an expansion does not converge within its
// iteration cap.

namespace sens {

// ln Γ(x) for x > 0.
double ln_gamma(double x);

// ln B(a, b) = ln Γ(a) + ln Γ(b) - ln Γ(a + b).
double ln_beta(double a, double b);

// Regularized incomplete beta I_x(a, b).
double reg_inc_beta(double a, double b, double x);

// Same as reg_inc_beta, with y = 1 - x supplied by the caller so that
// values of x close to one keep their precision.
double reg_inc_beta(double a, double b, double x, double y);

// Regularized lower incomplete gamma P(s, x).
double reg_inc_gamma_lower(double s, double x);

// Regularized upper incomplete gamma Q(s, x) = 1 - P(s, x), computed
// directly rather than by subtraction.
double reg_inc_gamma_upper(double s, double x);

// Standard normal CDF.
double normal_cdf(double z);

}  // namespace sens
