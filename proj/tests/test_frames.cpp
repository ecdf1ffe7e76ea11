#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "amol/frame.hpp"
#include "amol/lattice.hpp"

using namespace amol;

namespace {

double spectral_inner_re(const Spectrum& a, const Spectrum& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) s += (a.data[i] * std::conj(b.data[i])).real();
  return s;
}

cplx coeff_inner(const CoefficientSet& a, const CoefficientSet& b) {
  cplx s{};
  for (std::size_t i = 0; i < a.values.size(); ++i) s += a.values[i] * std::conj(b.values[i]);
  return s;
}

double energy(const CoefficientSet& c) {
  double s = 0;
  for (const auto& v : c.values) s += std::norm(v);
  return s;
}

}  // namespace

TEST(Lattice, SmithFormDiagonalizes) {
  const IntMat2 G{{{6, 4}, {2, 8}}};
  const auto s = smith_normal_form(G);
  IntMat2 P{};
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) P[i][k] += s.U[i][a] * G[a][b] * s.V[b][k];
  EXPECT_EQ(P[0][1], 0);
  EXPECT_EQ(P[1][0], 0);
  EXPECT_EQ(std::abs(P[0][0]), s.d1);
  EXPECT_EQ(std::abs(P[1][1]), s.d2);
  EXPECT_EQ(s.d2 % s.d1, 0);
  EXPECT_EQ(s.d1 * s.d2, std::abs(6 * 8 - 4 * 2));
  EXPECT_EQ(std::abs(s.U[0][0] * s.U[1][1] - s.U[0][1] * s.U[1][0]), 1);
}

TEST(Lattice, NearestInvertsPoint) {
  const BandLattice L(IntMat2{{{8, 3}, {0, 4}}});
  std::set<std::pair<long, long>> seen;
  for (int k1 = 0; k1 < L.d1(); ++k1)
    for (int k2 = 0; k2 < L.d2(); ++k2) {
      const auto x = L.point(k1, k2);
      const auto k = L.nearest(x);
      EXPECT_EQ(k[0], k1);
      EXPECT_EQ(k[1], k2);
      seen.insert({std::lround(x.x * 1e6), std::lround(x.y * 1e6)});
    }
  EXPECT_EQ(static_cast<std::int64_t>(seen.size()), L.size());
}

TEST(CurveletFrame, AngleCounts) {
  auto count_bands = [](const Frame& f, int j) {
    int c = 0;
    for (const auto& b : f.bands) c += b.j == j;
    return c;
  };
  const auto one = build_curvelet_frame(1.0, 4, 128);
  for (int j = 1; j <= 4; ++j) EXPECT_EQ(count_bands(one, j), 1);
  const auto ridge = build_curvelet_frame(0.0, 4, 128);
  for (int j = 1; j <= 4; ++j) EXPECT_EQ(count_bands(ridge, j), 1 << j);
  const auto half = build_curvelet_frame(0.5, 5, 256);
  for (int j = 1; j <= 5; ++j) EXPECT_EQ(count_bands(half, j), 1 << (j / 2));
}

TEST(CurveletFrame, DetailBandsVanishNearOrigin) {
  const auto f = build_curvelet_frame(0.5, 5, 256);
  for (const auto& b : f.bands) {
    if (b.j == 0) continue;
    const double hole = std::ldexp(1.0, b.j - 1) * f.scale_frequency;  // inner edge of the band
    for (const auto& e : b.entries) {
      const int a = centered(e.grid / f.n, f.n), c = centered(e.grid % f.n, f.n);
      EXPECT_GT(std::hypot(a, c), hole * 0.999);
    }
  }
}

TEST(CurveletFrame, RejectsBadParameters) {
  EXPECT_THROW(build_curvelet_frame(1.5, 3, 128), std::invalid_argument);
  EXPECT_THROW(build_curvelet_frame(0.5, 3, 100), std::invalid_argument);
  try {
    build_curvelet_frame(0.5, 12, 128);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find(std::to_string(max_curvelet_scale(128))), std::string::npos);
  }
}

TEST(ShearletFrame, ScalesAndCones) {
  const double beta = 2.0;
  const auto f = build_shearlet_frame(beta, 1.0, 3, 128);
  const double sigma = std::pow(2.0, beta / 2);
  EXPECT_DOUBLE_EQ(f.alpha, 1.0 / beta);
  for (const auto& b : f.bands) {
    if (b.j < 0) continue;
    EXPECT_NEAR(b.scale, std::pow(sigma, b.j), 1e-12);
  }
  // vertical cone = horizontal cone with swapped coordinates
  for (const auto& h : f.bands) {
    if (h.eps != 0 || h.j < 0) continue;
    for (const auto& v : f.bands) {
      if (v.eps != 1 || v.j != h.j || v.l != h.l) continue;
      for (double x = -40; x <= 40; x += 3.3)
        for (double y = -40; y <= 40; y += 2.9) EXPECT_DOUBLE_EQ(h.window(x, y), v.window(y, x));
    }
  }
}

TEST(WaveletFrame, TensorTypes) {
  const auto f = build_wavelet_frame(2.0, 1.0, 4, 128);
  std::map<int, std::set<int>> types;
  for (const auto& b : f.bands) {
    types[b.j].insert(b.l);
    EXPECT_DOUBLE_EQ(b.angle, 0.0);
  }
  EXPECT_TRUE(types[0].count(0));
  for (int j = 1; j <= 4; ++j) {
    EXPECT_EQ(types[j].size(), 3u);
    EXPECT_FALSE(types[j].count(0));
  }
}

TEST(Analyze, ZeroImage) {
  const auto f = build_curvelet_frame(0.5, 4, 128);
  const auto c = f.analyze(Image(128));
  for (const auto& v : c.values) EXPECT_EQ(v, cplx{});
  const auto back = f.synthesize(c);
  for (double v : back.data) EXPECT_EQ(v, 0.0);
}

TEST(Analyze, OwnCoefficientTwoWays) {
  const auto f = build_curvelet_frame(0.5, 4, 128);
  for (std::int64_t flat : {std::int64_t{3}, f.size() / 2, f.size() - 5}) {
    const Image e = f.element_image(flat);
    const double spatial = norm_sq(e);
    const double spectral = f.element_norm_sq(f.band_of(flat));
    EXPECT_NEAR(spatial, spectral, 1e-10);
    EXPECT_NEAR(f.analyze(e).values[flat].real(), spectral, 1e-10);
  }
}

class CurveletTightness : public ::testing::TestWithParam<double> {};

TEST_P(CurveletTightness, ParsevalAndRoundTrip) {
  const auto fr = build_curvelet_frame(GetParam(), 5, 128);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Image f = random_bandlimited_image(128, 0.8 * fr.covered_radius, seed);
    const auto c = fr.analyze(f);
    EXPECT_NEAR(energy(c) / norm_sq(f), 1.0, 1e-2);
    EXPECT_LE(relative_error(f, fr.synthesize(c)), 1e-2);
  }
}

INSTANTIATE_TEST_SUITE_P(Alphas, CurveletTightness, ::testing::Values(0.0, 0.5, 1.0));

TEST(Synthesize, AdjointOfAnalyze) {
  for (const Frame& fr : {build_curvelet_frame(0.5, 4, 64), build_shearlet_frame(2.0, 1.0, 2, 64),
                          build_wavelet_frame(2.0, 1.0, 3, 64)}) {
    const Image f = random_bandlimited_image(64, 20, 5);
    CoefficientSet c{fr.id, fr.n, std::vector<cplx>(static_cast<std::size_t>(fr.size()))};
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (auto& v : c.values) v = {g(rng), g(rng)};
    const auto fh = forward_fft(f);
    const cplx lhs = coeff_inner(fr.analyze(fh), c);
    const auto sc = fr.synthesize_spectrum(c);
    cplx rhs{};
    for (std::size_t i = 0; i < fh.data.size(); ++i) rhs += fh.data[i] * std::conj(sc.data[i]);
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-10 * (1 + std::abs(lhs))) << fr.id;
  }
}

TEST(Analyze, Linear) {
  const auto fr = build_shearlet_frame(2.0, 1.0, 2, 64);
  const Image a = random_bandlimited_image(64, 20, 1), b = random_bandlimited_image(64, 20, 2);
  Image s(64);
  for (std::size_t i = 0; i < s.data.size(); ++i) s.data[i] = 2 * a.data[i] - 3 * b.data[i];
  const auto ca = fr.analyze(a), cb = fr.analyze(b), cs = fr.analyze(s);
  for (std::size_t i = 0; i < cs.values.size(); ++i)
    EXPECT_NEAR(std::abs(cs.values[i] - (2.0 * ca.values[i] - 3.0 * cb.values[i])), 0.0, 1e-12);
}

TEST(ShearletFrame, ConjugateGradientInverse) {
  // solve S g = A* A f with S = A* A by CG; the iterate must recover f
  const auto fr = build_shearlet_frame(2.0, 1.0, 3, 128);
  const Image f = random_bandlimited_image(128, 0.5 * fr.covered_radius, 9);
  auto S = [&](const Spectrum& x) { return fr.synthesize_spectrum(fr.analyze(x)); };
  const Spectrum rhs = S(forward_fft(f));
  Spectrum x(128), r = rhs, p = rhs;
  double rr = spectral_inner_re(r, r);
  for (int it = 0; it < 200 && rr > 1e-28; ++it) {
    const Spectrum Ap = S(p);
    const double a = rr / spectral_inner_re(p, Ap);
    for (std::size_t i = 0; i < x.data.size(); ++i) {
      x.data[i] += a * p.data[i];
      r.data[i] -= a * Ap.data[i];
    }
    const double rr2 = spectral_inner_re(r, r);
    for (std::size_t i = 0; i < p.data.size(); ++i) p.data[i] = r.data[i] + (rr2 / rr) * p.data[i];
    rr = rr2;
  }
  EXPECT_LE(relative_error(f, inverse_fft(x)), 5e-2);
  EXPECT_LE(relative_error(f, fr.reconstruct(fr.analyze(f))), 5e-2);
}

TEST(FrameBounds, CurveletNearOne) {
  const auto fr = build_curvelet_frame(0.5, 5, 128);
  const auto b = estimate_frame_bounds(fr, 6, 4);
  EXPECT_GE(b.lower, 0.98);
  EXPECT_LE(b.upper, 1.02);
}

TEST(FrameBounds, WaveletRatio) {
  const auto fr = build_wavelet_frame(2.0, 1.0, 4, 128);
  const auto b = estimate_frame_bounds(fr, 6, 4);
  EXPECT_GE(b.lower / b.upper, 0.9);
}

TEST(FrameBounds, SingleElement) {
  const Image e = [] {
    Image x = random_bandlimited_image(32, 6, 1);
    const double n = std::sqrt(norm_sq(x));
    for (auto& v : x.data) v /= n;
    return x;
  }();
  const auto b = estimate_bounds([&](const Image& f) { return inner(f, e) * inner(f, e); },
                                 [&](std::uint64_t) { return e; }, 4, 1);
  EXPECT_NEAR(b.lower, 1.0, 1e-12);
  EXPECT_NEAR(b.upper, 1.0, 1e-12);
}

TEST(Frame, IndexLookupRoundTrip) {
  const auto fr = build_shearlet_frame(2.0, 1.0, 2, 64);
  for (std::int64_t flat = 0; flat < fr.size(); flat += 37) {
    const int b = fr.band_of(flat);
    const auto idx = fr.index_of(flat);
    EXPECT_EQ(fr.flat_index(b, idx.k1, idx.k2), flat);
    EXPECT_EQ(idx.j, fr.bands[b].j);
  }
}
