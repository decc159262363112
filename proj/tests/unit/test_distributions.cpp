#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <vector>

#include "sens/distributions.hpp"
#include "sens/errors.hpp"

using namespace sens;

namespace {

std::vector<std::int64_t> df_grid() {
  std::vector<std::int64_t> g;
  for (std::int64_t d = 1; d <= 50; ++d) g.push_back(d);
  g.insert(g.end(), {100, 270, 1000});
  return g;
}

}  // namespace

TEST(Params, RejectZeroDf) {
  EXPECT_THROW(StudentT(0), DomainError);
  EXPECT_THROW(ChiSquare(-1), DomainError);
  EXPECT_THROW(FisherF(1, 0), DomainError);
  EXPECT_EQ(describe(FisherF(2, 99)), "F(2,99)");
  EXPECT_EQ(describe(StudentT(28)), "t(28)");
  EXPECT_EQ(describe(ChiSquare(5)), "chi2(5)");
}

TEST(Cdf, PrintedCriticalValues) {
  EXPECT_NEAR(cdf(StudentT(270), 1.6514), 0.95, 1e-4);
  EXPECT_NEAR(cdf(ChiSquare(1), 3.8415), 0.95, 1e-4);
  EXPECT_NEAR(cdf(FisherF(2, 99), 3.0882), 0.95, 1e-4);
}

TEST(Cdf, BoundariesAndSymmetry) {
  for (std::int64_t df : {1, 2, 7, 270}) {
    EXPECT_EQ(cdf(StudentT(df), 0.0), 0.5);
    EXPECT_NEAR(cdf(StudentT(df), 1.3) + cdf(StudentT(df), -1.3), 1.0, 1e-15);
    EXPECT_EQ(cdf(ChiSquare(df), -1.0), 0.0);
    EXPECT_EQ(cdf(FisherF(df, 5), -1.0), 0.0);
    EXPECT_EQ(cdf(ChiSquare(df), 0.0), 0.0);
    EXPECT_NEAR(cdf(StudentT(df), 1e300), 1.0, 1e-15);
    EXPECT_NEAR(cdf(ChiSquare(df), 1e6), 1.0, 1e-15);
  }
}

TEST(Cdf, Monotone) {
  for (std::int64_t df : {1, 3, 46, 1000}) {
    double prev_t = 0.0, prev_c = 0.0, prev_f = 0.0;
    for (double x = -10.0; x <= 40.0; x += 0.05) {
      const double t = cdf(StudentT(df), x);
      const double c = cdf(ChiSquare(df), x);
      const double f = cdf(FisherF(df, 17), x);
      EXPECT_GE(t, prev_t);
      EXPECT_GE(c, prev_c);
      EXPECT_GE(f, prev_f);
      EXPECT_LE(t, 1.0);
      prev_t = t; prev_c = c; prev_f = f;
    }
  }
}

TEST(Cdf, AgreesWithBoost) {
  for (std::int64_t df : df_grid()) {
    const boost::math::students_t bt(static_cast<double>(df));
    const boost::math::chi_squared bc(static_cast<double>(df));
    const boost::math::fisher_f bf(static_cast<double>(df), 23.0);
    for (double x : {-4.0, -1.0, 0.3, 1.7, 3.0, 8.0}) {
      EXPECT_NEAR(cdf(StudentT(df), x), boost::math::cdf(bt, x), 1e-12) << df << " " << x;
      if (x > 0) {
        EXPECT_NEAR(cdf(ChiSquare(df), x), boost::math::cdf(bc, x), 1e-12) << df << " " << x;
        EXPECT_NEAR(cdf(FisherF(df, 23), x), boost::math::cdf(bf, x), 1e-12) << df << " " << x;
        EXPECT_NEAR(sf(ChiSquare(df), x), boost::math::cdf(boost::math::complement(bc, x)), 1e-12);
      }
    }
  }
}

TEST(Cdf, ChiSquareTwoDfIsExponential) {
  for (double x = 0.0; x < 60.0; x += 0.37) {
    EXPECT_NEAR(cdf(ChiSquare(2), x), 1.0 - std::exp(-x / 2.0), 1e-12);
  }
}

TEST(Sf, UpperTailKeepsRelativePrecision) {
  const double s = sf(StudentT(10), 40.0);
  const double expected = boost::math::cdf(boost::math::complement(boost::math::students_t(10.0), 40.0));
  EXPECT_NEAR(s / expected, 1.0, 1e-10);
}

TEST(Quantile, PrintedValues) {
  EXPECT_NEAR(quantile(StudentT(28), 0.95), 1.7011, 5e-4);
  EXPECT_NEAR(quantile(StudentT(162), 0.99), 2.349, 5e-3);
  EXPECT_NEAR(quantile(ChiSquare(5), 0.95), 11.0705, 5e-4);
  EXPECT_EQ(quantile(StudentT(9), 0.5), 0.0);
}

TEST(Quantile, ResidualWithinTolerance) {
  for (std::int64_t df : {1, 2, 5, 46, 1000}) {
    for (double p : {1e-9, 1e-4, 0.025, 0.3, 0.5, 0.95, 0.999, 1 - 1e-9}) {
      for (const DistributionParams& d :
           {DistributionParams(StudentT(df)), DistributionParams(ChiSquare(df)),
            DistributionParams(FisherF(df, 3)), DistributionParams(FisherF(2, df))}) {
        const double x = quantile(d, p);
        const double r = p < 0.5 ? cdf(d, x) - p : (1.0 - p) - sf(d, x);
        EXPECT_LE(std::abs(r), 1e-10) << describe(d) << " p=" << p;
      }
    }
  }
}

TEST(Quantile, RejectsOutOfRange) {
  EXPECT_THROW(quantile(StudentT(5), 0.0), DomainError);
  EXPECT_THROW(quantile(StudentT(5), 1.0), DomainError);
  EXPECT_THROW(quantile(ChiSquare(5), -0.2), DomainError);
  EXPECT_THROW(quantile(ChiSquare(5), std::nan("")), DomainError);
}

TEST(Quantile, MonotoneInP) {
  for (std::int64_t df : {1, 4, 100}) {
    double prev = -1e300;
    for (double p = 0.001; p < 1.0; p += 0.001) {
      const double x = quantile(StudentT(df), p);
      EXPECT_GT(x, prev);
      prev = x;
    }
  }
}

TEST(Quantile, RoundTripOverDfGrid) {
  for (std::int64_t df : df_grid()) {
    const std::vector<DistributionParams> dists{StudentT(df), ChiSquare(df), FisherF(df, df),
                                                FisherF(3, df)};
    for (const auto& d : dists) {
      // Central 99.9%: sample x at probabilities 0.0005 .. 0.9995.
      for (double p : {0.0005, 0.01, 0.2, 0.5, 0.8, 0.99, 0.9995}) {
        const double x0 = quantile(d, p);
        if (x0 == 0.0) continue;
        const double x1 = quantile(d, cdf(d, x0) < 0.5 ? cdf(d, x0) : 1.0 - sf(d, x0));
        EXPECT_LE(std::abs(x1 - x0) / std::abs(x0), 1e-8) << describe(d) << " p=" << p;
      }
    }
  }
}

TEST(Quantile, FOneDfIsSquaredT) {
  for (std::int64_t d : {1, 2, 9, 46, 270, 1000}) {
    for (double p : {0.5, 0.9, 0.95, 0.99}) {
      const double f = quantile(FisherF(1, d), p);
      const double t = quantile(StudentT(d), (1.0 + p) / 2.0);
      EXPECT_LE(std::abs(f - t * t) / (t * t), 1e-8) << d << " " << p;
    }
  }
}

TEST(Density, IntegratesToCdfDifference) {
  const DistributionParams d = FisherF(3, 12);
  double integral = 0.0;
  const int steps = 15000;
  const double h = 1.5 / steps;
  for (int i = 0; i < steps; ++i) integral += detail::density(d, 0.5 + (i + 0.5) * h) * h;
  EXPECT_NEAR(integral, cdf(d, 2.0) - cdf(d, 0.5), 1e-7);
}
