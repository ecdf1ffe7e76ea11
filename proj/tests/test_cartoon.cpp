#include <cmath>

#include <gtest/gtest.h>

#include "amol/cartoon.hpp"

using namespace amol;

TEST(Cartoon, ZeroFunctions) {
  CartoonSpec s = disc_spec(0.2);
  s.f0.clear();
  s.f1.clear();
  const auto img = generate_cartoon(s, 64);
  for (double v : img.data) EXPECT_EQ(v, 0.0);
}

TEST(Cartoon, DiscArea) {
  const double r = 0.27;
  const auto img = generate_cartoon(disc_spec(r), 512);
  double sum = 0;
  for (double v : img.data) sum += v;
  const double area = sum / (512.0 * 512.0);
  EXPECT_NEAR(area / (kPi * r * r), 1.0, 1e-2);
}

TEST(Cartoon, SeedDeterminism) {
  const auto a = generate_cartoon(random_cartoon_spec(2.0, 17), 128);
  const auto b = generate_cartoon(random_cartoon_spec(2.0, 17), 128);
  EXPECT_EQ(a.data, b.data);
  const auto c = generate_cartoon(random_cartoon_spec(2.0, 18), 128);
  EXPECT_NE(a.data, c.data);
}

TEST(Cartoon, RandomSpecsAreValid) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto s = random_cartoon_spec(2.0, seed);
    EXPECT_TRUE(s.envelope_ok());
    EXPECT_NO_THROW(validate(s));
  }
}

TEST(Cartoon, RejectsNonpositiveRadius) {
  EXPECT_THROW(validate(disc_spec(-0.1)), std::invalid_argument);
  CartoonSpec s = disc_spec(0.1);
  s.amps = {0.2};
  s.phases = {0.0};
  EXPECT_THROW(validate(s), std::invalid_argument);
  EXPECT_THROW(validate(disc_spec(0.6)), std::invalid_argument);
}

namespace {

CartoonSpec ladder_spec(double decay) {
  CartoonSpec s = disc_spec(0.3);
  for (int m = 1; m <= 200; ++m) {
    s.amps.push_back(0.05 * std::pow(m, -decay));
    s.phases.push_back(0.7 * m);
  }
  return s;
}

}  // namespace

TEST(BoundaryRegularity, Examples) {
  EXPECT_EQ(boundary_regularity_estimate(disc_spec(0.3), 10.0), 10.0);
  const double b2 = boundary_regularity_estimate(ladder_spec(3.2));
  EXPECT_GE(b2, 1.8);
  EXPECT_LE(b2, 2.4);
  EXPECT_LT(boundary_regularity_estimate(ladder_spec(2.2)), 1.5);
}
