#include "nsmax/intensity.hpp"

#include <gtest/gtest.h>

namespace nsmax {
namespace {

TEST(IntensityProfile, ConstantIntegral) {
  IntensityProfile lambda = IntensityProfile::constant(2.0);
  EXPECT_DOUBLE_EQ(cumulative_intensity(lambda, 0.0, 3.0), 6.0);
  EXPECT_DOUBLE_EQ(cumulative_intensity(lambda, 3.0, 3.0), 0.0);
}

TEST(IntensityProfile, TwoPieceIntegral) {
  IntensityProfile lambda(2.0, {0.0, 1.0}, {1.0, 3.0});
  EXPECT_DOUBLE_EQ(cumulative_intensity(lambda, 0.5, 1.5), 0.5 * 1.0 + 0.5 * 3.0);
}

TEST(IntensityProfile, PeriodicExtension) {
  IntensityProfile lambda(2.0, {0.0, 1.0}, {1.0, 3.0});
  EXPECT_DOUBLE_EQ(lambda.value_at(0.5), 1.0);
  EXPECT_DOUBLE_EQ(lambda.value_at(1.5), 3.0);
  EXPECT_DOUBLE_EQ(lambda.value_at(2.5), 1.0);
  EXPECT_DOUBLE_EQ(lambda.value_at(7.99), 3.0);
  // One full period integrates to 4; ten periods to 40.
  EXPECT_DOUBLE_EQ(lambda.integrate(0.0, 20.0), 40.0);
  EXPECT_DOUBLE_EQ(lambda.integrate(0.5, 2.5), 0.5 + 3.0 + 0.5);
}

TEST(IntensityProfile, SupInfOverWindows) {
  IntensityProfile lambda(3.0, {0.0, 1.0, 2.0}, {1.0, 5.0, 2.0});
  EXPECT_DOUBLE_EQ(lambda.sup(0.0, 0.5), 1.0);
  EXPECT_DOUBLE_EQ(lambda.inf(0.0, 0.5), 1.0);
  EXPECT_DOUBLE_EQ(lambda.sup(0.5, 1.5), 5.0);
  EXPECT_DOUBLE_EQ(lambda.inf(0.5, 1.5), 1.0);
  // Window wrapping the period boundary sees pieces 2 and 0.
  EXPECT_DOUBLE_EQ(lambda.sup(2.5, 3.5), 2.0);
  EXPECT_DOUBLE_EQ(lambda.inf(2.5, 3.5), 1.0);
  // Window at least a full period long sees everything.
  EXPECT_DOUBLE_EQ(lambda.sup(10.2, 13.2), 5.0);
  EXPECT_DOUBLE_EQ(lambda.inf(10.2, 13.2), 1.0);
}

TEST(IntensityProfile, Validation) {
  EXPECT_THROW(IntensityProfile(1.0, {0.1}, {1.0}), std::invalid_argument);       // first != 0
  EXPECT_THROW(IntensityProfile(1.0, {0.0, 0.0}, {1.0, 2.0}), std::invalid_argument);
  EXPECT_THROW(IntensityProfile(1.0, {0.0, 1.0}, {1.0, 2.0}), std::invalid_argument);  // >= period
  EXPECT_THROW(IntensityProfile(1.0, {0.0}, {-1.0}), std::invalid_argument);
  EXPECT_THROW(cumulative_intensity(IntensityProfile::constant(1.0), 2.0, 1.0),
               std::invalid_argument);
}

TEST(RateGrid, SumsProfilesExactly) {
  IntensityProfile mu(2.0, {0.0, 1.0}, {0.5, 0.1});
  IntensityProfile gamma(3.0, {0.0, 1.5}, {2.0, 1.0});
  RateGrid grid = build_rate_grid({&mu}, gamma, 7.0);
  // Cumulative mass of mu + gamma reproduces the profile integrals at
  // arbitrary times.
  for (double t : {0.0, 0.7, 1.0, 1.5, 2.2, 3.0, 4.5, 6.9, 7.0}) {
    EXPECT_NEAR(grid.cumulative_at(t), mu.integrate(0.0, t) + gamma.integrate(0.0, t), 1e-12)
        << "t = " << t;
  }
}

}  // namespace
}  // namespace nsmax
