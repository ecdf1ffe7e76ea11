#include <cmath>

#include <gtest/gtest.h>

#include "amol/approx.hpp"

using namespace amol;

TEST(MagnitudeOrder, SortsDescending) {
  CoefficientSet c{"x", 4, {1.0, 3.0, cplx(0, -2.0)}};
  const auto o = magnitude_order(c);
  EXPECT_EQ(o, (std::vector<std::int64_t>{1, 2, 0}));
}

TEST(Nterm, ZeroAndAllTerms) {
  const auto fr = build_curvelet_frame(0.5, 5, 128);
  const Image f = random_bandlimited_image(128, 0.7 * fr.covered_radius, 3);
  const auto c = fr.analyze(f);
  EXPECT_NEAR(nterm(fr, c, f, 0).error2, norm_sq(f), 1e-12 * norm_sq(f));
  const auto all = nterm(fr, c, f, fr.size() + 10);
  EXPECT_TRUE(all.clamped);
  EXPECT_LE(all.error2, 1e-2 * norm_sq(f));
}

TEST(Nterm, KeepsLargest) {
  const auto fr = build_wavelet_frame(2.0, 1.0, 2, 32);
  CoefficientSet c{fr.id, 32, std::vector<cplx>(static_cast<std::size_t>(fr.size()))};
  c.values[5] = 3;
  c.values[9] = 2;
  c.values[1] = 1;
  const Image f = fr.reconstruct(c);
  const auto r = nterm(fr, c, f, 2);
  CoefficientSet two = c;
  two.values[1] = 0;
  const Image g = fr.reconstruct(two);
  EXPECT_LE(relative_error(g, r.approx), 1e-12);
  EXPECT_EQ(r.kept, 2);
}

TEST(ErrorCurve, SingleElementIsSparse) {
  // the frames are redundant, so one element spreads over its Gramian row
  const auto fr = build_curvelet_frame(0.5, 4, 64);
  std::int64_t mid = 0;
  for (const auto& b : fr.bands)
    if (b.j == 2) mid = b.offset + b.count() / 2;
  const Image e = fr.element_image(mid);
  const auto c = error_curve(fr, e, {1, 4, 16, 64, 256, fr.size()});
  for (std::size_t i = 1; i < c.error2.size(); ++i) EXPECT_LE(c.error2[i], c.error2[i - 1] * (1 + 1e-12));
  EXPECT_LT(c.error2[0], c.norm2);
  EXPECT_LE(c.error2[4], 5e-2 * c.norm2);  // 256 of ~12000 terms
  EXPECT_LE(c.error2.back(), 1e-6 * c.norm2);
}

TEST(ErrorCurve, LadderValidation) {
  const auto fr = build_curvelet_frame(0.5, 3, 32);
  EXPECT_THROW(error_curve(fr, Image(32), {1, 2, 4}), std::invalid_argument);
  EXPECT_THROW(error_curve(fr, Image(32), {8, 4, 2, 1}), std::invalid_argument);
  EXPECT_EQ(dyadic_ladder(2, 5), (std::vector<std::int64_t>{4, 8, 16, 32}));
}

TEST(FitLoglog, ExactPowerLaw) {
  std::vector<double> x, y;
  for (int i = 1; i < 10; ++i) {
    x.push_back(i);
    y.push_back(3 * std::pow(i, -1.7));
  }
  const auto f = fit_loglog(x, y);
  EXPECT_NEAR(f.slope, -1.7, 1e-12);
  EXPECT_NEAR(std::exp(f.intercept), 3.0, 1e-12);
}

TEST(WeakLp, PowerLawIsFlat) {
  std::vector<double> m;
  for (int n = 1; n <= 1024; ++n) m.push_back(std::pow(n, -1.5));
  const auto d = weak_lp(m, 1.0 / 1.5);
  for (double v : d.value) EXPECT_NEAR(v, 1.0, 1e-12);
  EXPECT_THROW(weak_lp(m, 0.0), std::invalid_argument);
}

TEST(Transfer, Certificate) {
  CoefficientSet a{"a", 4, {1.0, 1.0}}, b{"b", 4, {2.0, 0.0}};
  const auto t = transfer_certificate(a, b, 1.0, 1.0);
  EXPECT_TRUE(t.holds);
  EXPECT_NEAR(t.slack, 1.0, 1e-15);
  EXPECT_FALSE(transfer_certificate(a, b, 0.5, 1.0).holds);
  EXPECT_NEAR(lp_norm({3.0, cplx(0, 4.0)}, 2.0), 5.0, 1e-15);
}
