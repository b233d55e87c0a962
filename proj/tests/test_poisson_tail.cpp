#include "nsmax/poisson_tail.hpp"

#include <cmath>

#include <gtest/gtest.h>

namespace nsmax {
namespace {

// Direct Poisson pmf summation, the oracle for the log-space route.
double q_by_pmf(int k, double x) {
  double pmf = std::exp(-x);
  double total = pmf;
  for (int i = 1; i < k; ++i) {
    pmf *= x / i;
    total += pmf;
  }
  return total;
}

TEST(RegularizedGammaQ, BoundaryValues) {
  EXPECT_DOUBLE_EQ(regularized_gamma_q(1, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(regularized_gamma_q(7, 0.0), 1.0);
  EXPECT_NEAR(regularized_gamma_q(1, 2.5), std::exp(-2.5), 1e-15);
}

TEST(RegularizedGammaQ, MatchesPmfSummation) {
  EXPECT_NEAR(regularized_gamma_q(5, 5.0), 0.44049328506521241, 1e-13);
  for (int k : {1, 2, 5, 10, 40}) {
    for (double x : {0.1, 1.0, 7.3, 25.0, 80.0}) {
      EXPECT_NEAR(regularized_gamma_q(k, x), q_by_pmf(k, x), 1e-12) << "k=" << k << " x=" << x;
    }
  }
}

TEST(RegularizedGammaQ, StableForLargeArguments) {
  double q = regularized_gamma_q(5, 1e4);
  EXPECT_TRUE(std::isfinite(q));
  EXPECT_GE(q, 0.0);
  EXPECT_LT(q, 1e-300);
  EXPECT_DOUBLE_EQ(regularized_gamma_q(10000, 1.0), 1.0);
}

TEST(RegularizedGammaQ, MonotoneDecreasingInX) {
  double prev = 1.1;
  for (double x = 0.0; x <= 30.0; x += 0.5) {
    double q = regularized_gamma_q(6, x);
    EXPECT_LE(q, prev + 1e-15);
    prev = q;
  }
}

TEST(RegularizedGammaQ, Domain) {
  EXPECT_THROW(regularized_gamma_q(0, 1.0), std::domain_error);
  EXPECT_THROW(regularized_gamma_q(3, -0.5), std::domain_error);
}

TEST(GammaAntiderivative, ValueAtZeroIsMinusK) {
  for (int k : {1, 2, 5, 12}) {
    EXPECT_DOUBLE_EQ(gamma_antiderivative(k, 0.0), -double(k));
  }
}

TEST(GammaAntiderivative, DecaysToZero) {
  for (int k : {1, 3, 8}) {
    EXPECT_LT(std::abs(gamma_antiderivative(k, 50.0 * k)), 1e-8);
  }
}

TEST(GammaAntiderivative, FrozenSpotValue) {
  EXPECT_NEAR(gamma_antiderivative(5, 3.0), -2.1346205562721666, 1e-12);
}

TEST(GammaAntiderivative, DerivativeMatchesQByFiniteDifferences) {
  const double h = 1e-5;
  for (int k : {1, 2, 5, 10}) {
    for (double x : {1.0, double(k), 3.0 * k}) {
      double numeric =
          (gamma_antiderivative(k, x + h) - gamma_antiderivative(k, x - h)) / (2.0 * h);
      double exact = regularized_gamma_q(k, x);
      EXPECT_NEAR(numeric / exact, 1.0, 1e-5) << "k=" << k << " x=" << x;
    }
  }
}

}  // namespace
}  // namespace nsmax
