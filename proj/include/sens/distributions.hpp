#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <variant>

namespace sens {

// Degrees of freedom are integral throughout; floating-point arguments are
// rejected at compile time.
class StudentT {
 public:
  explicit StudentT(std::int64_t df);
  template <std::floating_point T>
  StudentT(T) = delete;

  std::int64_t df() const noexcept { return df_; }
  friend bool operator==(const StudentT&, const StudentT&) = default;

 private:
  std::int64_t df_;
};

class ChiSquare {
 public:
  explicit ChiSquare(std::int64_t df);
  template <std::floating_point T>
  ChiSquare(T) = delete;

  std::int64_t df() const noexcept { return df_; }
  friend bool operator==(const ChiSquare&, const ChiSquare&) = default;

 private:
  std::int64_t df_;
};

class FisherF {
 public:
  FisherF(std::int64_t dfn, std::int64_t dfd);
  template <std::floating_point T, std::floating_point U>
  FisherF(T, U) = delete;

  std::int64_t dfn() const noexcept { return dfn_; }
  std::int64_t dfd() const noexcept { return dfd_; }
  friend bool operator==(const FisherF&, const FisherF&) = default;

 private:
  std::int64_t dfn_;
  std::int64_t dfd_;
};

using DistributionParams = std::variant<StudentT, ChiSquare, FisherF>;

// e.g. "t(28)", "chi2(5)", "F(2,99)".
std::string describe(const DistributionParams& params);

// P(X <= x). Chi-square and F return 0 for x < 0.
double cdf(const DistributionParams& params, double x);

// P(X > x), evaluated without cancellation in the upper tail.
double sf(const DistributionParams& params, double x);

// x with cdf(x) = p, to a CDF residual of at most 1e-10. p must lie in (0, 1).
double quantile(const DistributionParams& params, double p);

namespace detail {
double density(const DistributionParams& params, double x);
}

}  // namespace sens
