#include <cmath>

#include <gtest/gtest.h>

#include "amol/gramian.hpp"

using namespace amol;

namespace {

// spatial quadrature of two real elements
double quadrature(const Frame& A, std::int64_t a, const Frame& B, std::int64_t b) {
  return inner(A.element_image(a), B.element_image(b));
}

std::int64_t first_in(const Frame& f, int j, std::int64_t k = 0) {
  for (const auto& b : f.bands)
    if (b.j == j) return b.offset + k % b.count();
  return -1;
}

}  // namespace

TEST(CrossInnerProduct, SelfIsNormSquared) {
  const auto C = build_curvelet_frame(0.5, 4, 128);
  for (std::int64_t l : {std::int64_t{0}, C.size() / 3, C.size() - 1}) {
    const cplx v = cross_inner_product(C, l, C, l);
    EXPECT_NEAR(v.imag(), 0.0, 1e-15);
    EXPECT_NEAR(v.real(), C.element_norm_sq(C.band_of(l)), 1e-12);
    EXPECT_GT(v.real(), 0.0);
  }
}

TEST(CrossInnerProduct, DisjointBandsVanish) {
  const auto C = build_curvelet_frame(0.5, 5, 128);
  EXPECT_EQ(cross_inner_product(C, first_in(C, 1), C, first_in(C, 4)), cplx{});
}

TEST(CrossInnerProduct, MatchesQuadrature) {
  const auto C = build_curvelet_frame(0.5, 4, 128);
  const auto S = build_shearlet_frame(2.0, 1.0, 3, 128);
  for (std::int64_t k : {0, 7, 31}) {
    const auto a = first_in(C, 3, k * 5), b = first_in(S, 3, k);
    const double q = quadrature(C, a, S, b);
    const cplx v = cross_inner_product(C, a, S, b);
    const double scale = std::sqrt(C.element_norm_sq(C.band_of(a)) * S.element_norm_sq(S.band_of(b)));
    EXPECT_NEAR(v.real(), q, 1e-12 * scale);
    EXPECT_NEAR(v.imag(), 0.0, 1e-12 * scale);
  }
}

TEST(CrossInnerProduct, SymmetryAndCauchySchwarz) {
  const auto C = build_curvelet_frame(0.5, 4, 64);
  const auto S = build_shearlet_frame(2.0, 1.0, 2, 64);
  for (std::int64_t i = 0; i < 40; ++i) {
    const std::int64_t a = (i * 7919) % C.size(), b = (i * 104729) % S.size();
    const cplx ab = cross_inner_product(C, a, S, b), ba = cross_inner_product(S, b, C, a);
    EXPECT_NEAR(std::abs(ab - std::conj(ba)), 0.0, 1e-15);
    EXPECT_LE(std::abs(ab),
              std::sqrt(C.element_norm_sq(C.band_of(a)) * S.element_norm_sq(S.band_of(b))) * (1 + 1e-12));
  }
}

TEST(GramianRow, MatchesPairwiseAndParseval) {
  const auto C = build_curvelet_frame(0.5, 4, 64);
  const auto S = build_shearlet_frame(2.0, 1.0, 2, 64);
  const std::int64_t lam = first_in(C, 2, 3);
  const auto row = gramian_row(C, lam, S);
  for (std::int64_t m = 0; m < S.size(); m += 11)
    EXPECT_NEAR(std::abs(row[m] - cross_inner_product(C, lam, S, m)), 0.0, 1e-13);
  // tight frame: the row of an element against its own frame carries its norm
  const auto self = gramian_row(C, lam, C);
  double s = 0;
  for (const auto& v : self) s += std::norm(v);
  EXPECT_NEAR(s, C.element_norm_sq(C.band_of(lam)), 1e-10);
}

TEST(SampleGramian, EmptyAndDeterministic) {
  const auto C = build_curvelet_frame(0.5, 4, 64);
  const auto S = build_shearlet_frame(2.0, 1.0, 2, 64);
  EXPECT_TRUE(sample_gramian(C, S, 0, 1).empty());
  const auto a = sample_gramian(C, S, 200, 42), b = sample_gramian(C, S, 200, 42);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].a, b[i].a);
    EXPECT_EQ(a[i].b, b[i].b);
    EXPECT_EQ(a[i].magnitude, b[i].magnitude);
    EXPECT_GE(a[i].omega, 1.0);
  }
}

TEST(SampleGramian, SpansThreeDecades) {
  // a 256 grid only reaches shearlet scale 5; 512 gives the full range
  const auto C = build_curvelet_frame(0.5, 7, 512);
  const auto S = build_shearlet_frame(2.0, 1.0, 6, 512);
  const auto s = sample_gramian(C, S, 4000, 3);
  double lo = 1e300, hi = 0;
  for (const auto& x : s) {
    lo = std::min(lo, x.omega);
    hi = std::max(hi, x.omega);
  }
  EXPECT_GE(std::log10(hi / lo), 3.0);
}

TEST(VerifyDecay, Examples) {
  std::vector<GramianSample> zeros(5);
  for (int i = 0; i < 5; ++i) zeros[i].omega = std::pow(10.0, i);
  auto r = verify_decay(zeros, 2.0);
  EXPECT_EQ(r.C, 0.0);
  EXPECT_TRUE(r.pass);
  GramianSample one;
  one.omega = 1;
  one.magnitude = 1;
  r = verify_decay({one}, 2.0);
  EXPECT_DOUBLE_EQ(r.C, 1.0);
  EXPECT_THROW(verify_decay({}, 2.0), std::invalid_argument);
}

TEST(VerifyDecay, ExactPowerLaw) {
  std::vector<GramianSample> s;
  for (int i = 0; i <= 40; ++i) {
    GramianSample g;
    g.omega = std::pow(10.0, i / 10.0);
    g.magnitude = 0.5 * std::pow(g.omega, -2.5);
    s.push_back(g);
  }
  const auto r = verify_decay(s, 2.0);
  EXPECT_NEAR(r.slope, -2.5, 1e-9);
  EXPECT_TRUE(r.pass);
  const auto slow = verify_decay(s, 3.0);
  EXPECT_FALSE(slow.pass);
}

TEST(CrossnormBound, Examples) {
  std::vector<MatrixEntry> id;
  for (int i = 0; i < 6; ++i) id.push_back({i, i, 1.0});
  for (double p : {0.5, 0.75, 1.0, 2.0}) EXPECT_NEAR(lp_crossnorm_bound(id, p), 1.0, 1e-15);
  const double a = 0.3, b = 0.8, p = 0.5;
  EXPECT_NEAR(lp_crossnorm_bound({{0, 0, a}, {0, 1, b}}, p), std::pow(std::pow(a, p) + std::pow(b, p), 1 / p),
              1e-14);
}

TEST(CrossnormBound, SampledSaturates) {
  const auto C = build_curvelet_frame(0.5, 6, 256);
  const auto S = build_shearlet_frame(2.0, 1.0, 5, 256);
  CrossnormOptions o;
  o.rows_per_band = 1;
  o.max_scale = 5;
  const double b5 = sampled_crossnorm_bound(C, S, 0.7, o).bound;
  o.max_scale = 6;
  const double b6 = sampled_crossnorm_bound(C, S, 0.7, o).bound;
  EXPECT_GT(b5, 1.0);
  EXPECT_LT(b6 / b5 - 1, 0.02);
}
