#pragma once

#include "sens/distributions.hpp"

namespace sens {

// δ for the noncentral t (any sign), λ for noncentral chi-square and F (λ >= 0).
struct Noncentrality {
  double value = 0.0;
  friend bool operator==(const Noncentrality&, const Noncentrality&) = default;
};

// Noncentral CDF. Chi-square and F use the Poisson mixture over central
// terms; t uses the series in incomplete beta functions. All series start
// at the modal Poisson index and expand in both directions until the
// remaining weight is below 1e-14, with a cap of 10^4 terms.
double noncentral_cdf(const DistributionParams& params, Noncentrality nc, double x);

// 1 - noncentral_cdf.
double noncentral_sf(const DistributionParams& params, Noncentrality nc, double x);

}  // namespace sens
