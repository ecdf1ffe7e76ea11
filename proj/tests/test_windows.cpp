#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "amol/param.hpp"
#include "amol/windows.hpp"

using namespace amol;

TEST(SmoothStep, Examples) {
  EXPECT_EQ(smooth_step(-1), 0.0);
  EXPECT_EQ(smooth_step(2), 1.0);
  EXPECT_NEAR(smooth_step(0.5), 0.5, 1e-15);
  for (double t = -0.2; t < 1.2; t += 0.013) EXPECT_NEAR(smooth_step(t) + smooth_step(1 - t), 1.0, 1e-14);
}

TEST(RadialLowpass, Examples) {
  EXPECT_EQ(radial_lowpass(1.0), 1.0);
  EXPECT_EQ(radial_lowpass(2.5), 0.0);
  const double v = radial_lowpass(1.75);
  EXPECT_GT(v, 0.0);
  EXPECT_LT(v, 1.0);
}

TEST(RadialBand, Examples) {
  const double u = 1.0 / (8 * kPi);
  EXPECT_NEAR(radial_band(1, 2 * u), 1.0, 1e-14);
  EXPECT_EQ(radial_band(1, 4 * u * 1.001), 0.0);
  for (int j = 1; j < 8; ++j) EXPECT_EQ(radial_band(j, 0.0), 0.0);
}

TEST(RadialBand, SumBetweenOneAndTwo) {
  for (double r = 0; r < 3000.0 / (8 * kPi); r += 0.0731) {
    double s = 0;
    for (int j = 0; j < 16; ++j) s += radial_band(j, r);
    EXPECT_GE(s, 1.0) << "r=" << r;
    EXPECT_LE(s, 2.0) << "r=" << r;
  }
}

TEST(Angular, Examples) {
  for (int j = 1; j < 7; ++j) {
    EXPECT_NEAR(angular(0.5, j, 0, 0.0), 1.0, 1e-14);
    EXPECT_NEAR(angular(0.5, j, 0, kPi), 1.0, 1e-14);
  }
  EXPECT_EQ(angular_base(0.9 * kPi), 0.0);
  EXPECT_EQ(angular_base(0.4 * kPi), 1.0);
  // j = 2, alpha = 1/2: 2 * phi = 0.9 pi is outside the support; the antipode is too
  EXPECT_EQ(angular(0.5, 2, 0, 0.45 * kPi), 0.0);
}

TEST(PhiNormalizer, Bounds) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-300.0 / (8 * kPi), 300.0 / (8 * kPi));
  EXPECT_NEAR(phi_normalizer(0.5, 0, 0), 1.0, 1e-15);
  for (double a : {0.0, 0.5, 1.0})
    for (int i = 0; i < 2000; ++i) {
      const double x = u(rng), y = u(rng);
      const double v = phi_normalizer(a, x, y);
      EXPECT_GE(v, 1.0 - 1e-12);
      EXPECT_LE(v, 8.0 + 1e-12);
    }
}

TEST(PhiNormalizer, ActiveBandsMatchBruteForce) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-200.0 / (8 * kPi), 200.0 / (8 * kPi));
  for (int i = 0; i < 300; ++i) {
    const double x = u(rng), y = u(rng);
    EXPECT_NEAR(phi_normalizer(0.5, x, y), phi_normalizer_all(0.5, x, y, 12), 1e-12);
  }
}

TEST(CurveletAngles, Formula) {
  for (int j = 1; j < 10; ++j) {
    EXPECT_EQ(curvelet_angles(0.5, j), 1 << (j / 2));
    EXPECT_EQ(curvelet_angles(1.0, j), 1);
    EXPECT_EQ(curvelet_angles(0.0, j), 1 << j);
  }
}

TEST(Meyer, PartitionOfUnity) {
  const double sigma = 2.0, kappa = std::sqrt(sigma);
  for (double t = 0; t < 500; t += 0.377) {
    double s = meyer_lowpass(t, kappa) * meyer_lowpass(t, kappa);
    for (int j = 0; j < 12; ++j) {
      const double b = meyer_bandpass(t / std::pow(sigma, j), sigma, kappa);
      s += b * b;
    }
    EXPECT_NEAR(s, 1.0, 1e-12) << t;
  }
}

TEST(ShearBump, ShiftsSquareSumToOne) {
  for (double u = -3; u < 3; u += 0.0137) {
    double s = 0;
    for (int k = -5; k <= 5; ++k) s += shear_bump(u - k) * shear_bump(u - k);
    EXPECT_NEAR(s, 1.0, 1e-12);
    if (std::abs(u) >= 1) {
      EXPECT_EQ(shear_bump(u), 0.0);
    }
  }
}
