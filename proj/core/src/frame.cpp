#include "amol/frame.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace amol {

std::string family_name(Family f) {
  switch (f) {
    case Family::Curvelet: return "curvelet";
    case Family::Shearlet: return "shearlet";
    default: return "wavelet";
  }
}

void Frame::finalize() {
  total_ = 0;
  for (auto& b : bands) {
    b.offset = total_;
    total_ += b.count();
  }
  symbol_.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (const auto& b : bands)
    for (const auto& e : b.entries) symbol_[e.grid] += e.w * e.w;
  bounds_.lower = 1e300;
  bounds_.upper = 0.0;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      const double s = symbol_[static_cast<std::size_t>(a) * n + c];
      bounds_.upper = std::max(bounds_.upper, s);
      if (std::hypot(centered(a, n), centered(c, n)) <= covered_radius)
        bounds_.lower = std::min(bounds_.lower, s);
    }
  if (bounds_.lower > bounds_.upper) bounds_.lower = bounds_.upper;
}

CoefficientSet Frame::analyze(const Image& f) const {
  if (f.n != n) throw std::invalid_argument("analyze: image grid does not match frame grid");
  return analyze(forward_fft(f));
}

CoefficientSet Frame::analyze(const Spectrum& fhat) const {
  if (fhat.n != n) throw std::invalid_argument("analyze: spectrum grid does not match frame grid");
  CoefficientSet out{id, n, std::vector<cplx>(static_cast<std::size_t>(total_))};
  std::vector<cplx> buf;
  for (const auto& b : bands) {
    buf.assign(static_cast<std::size_t>(b.count()), cplx{});
    for (const auto& e : b.entries) buf[e.cls] += fhat.data[e.grid] * e.w;
    fft2_inplace(buf.data(), b.lattice.d1(), b.lattice.d2(), +1);
    for (std::size_t k = 0; k < buf.size(); ++k) out.values[b.offset + k] = buf[k] * b.norm;
  }
  return out;
}

Spectrum Frame::synthesize_spectrum(const CoefficientSet& c) const {
  if (c.n != n || static_cast<std::int64_t>(c.values.size()) != total_)
    throw std::invalid_argument("synthesize: coefficients do not belong to this frame");
  Spectrum out(n);
  std::vector<cplx> buf;
  for (const auto& b : bands) {
    buf.assign(c.values.begin() + b.offset, c.values.begin() + b.offset + b.count());
    bool any = false;
    for (const auto& v : buf)
      if (v != cplx{}) { any = true; break; }
    if (!any) continue;
    fft2_inplace(buf.data(), b.lattice.d1(), b.lattice.d2(), -1);
    for (const auto& e : b.entries) out.data[e.grid] += (b.norm * e.w) * buf[e.cls];
  }
  return out;
}

Image Frame::synthesize(const CoefficientSet& c) const { return inverse_fft(synthesize_spectrum(c)); }

Spectrum Frame::reconstruct_spectrum(const CoefficientSet& c) const {
  Spectrum s = synthesize_spectrum(c);
  for (std::size_t i = 0; i < s.data.size(); ++i) s.data[i] /= std::max(symbol_[i], bounds_.lower);
  return s;
}

Image Frame::reconstruct(const CoefficientSet& c) const { return inverse_fft(reconstruct_spectrum(c)); }

int Frame::band_of(std::int64_t flat) const {
  if (flat < 0 || flat >= total_) throw std::out_of_range("coefficient index out of range");
  auto it = std::upper_bound(bands.begin(), bands.end(), flat,
                             [](std::int64_t v, const Band& b) { return v < b.offset; });
  return static_cast<int>(it - bands.begin()) - 1;
}

Index Frame::index_of(std::int64_t flat) const {
  const Band& b = bands[band_of(flat)];
  const std::int64_t local = flat - b.offset;
  return {b.eps, b.j, b.l, local / b.lattice.d2(), local % b.lattice.d2()};
}

Vec2 Frame::location_of(std::int64_t flat) const {
  const Band& b = bands[band_of(flat)];
  const std::int64_t local = flat - b.offset;
  return b.lattice.point(local / b.lattice.d2(), local % b.lattice.d2());
}

ParamPoint Frame::point_of(std::int64_t flat) const {
  const Band& b = bands[band_of(flat)];
  return {b.scale, b.angle, location_of(flat)};
}

std::int64_t Frame::flat_index(int band, std::int64_t k1, std::int64_t k2) const {
  const Band& b = bands.at(band);
  return b.offset + k1 * b.lattice.d2() + k2;
}

double Frame::element_norm_sq(int band) const {
  const Band& b = bands.at(band);
  double s = 0;
  for (const auto& e : b.entries) s += e.w * e.w;
  return s * b.norm * b.norm;
}

Spectrum Frame::element_spectrum(std::int64_t flat) const {
  const Band& b = bands[band_of(flat)];
  const Vec2 x = location_of(flat);
  Spectrum s(n);
  for (const auto& e : b.entries) {
    const int xi1 = centered(e.grid / n, n), xi2 = centered(e.grid % n, n);
    const double ph = -2 * kPi * (xi1 * x.x + xi2 * x.y);
    s.data[e.grid] = b.norm * e.w * cplx(std::cos(ph), std::sin(ph));
  }
  return s;
}

Image Frame::element_image(std::int64_t flat) const { return inverse_fft(element_spectrum(flat)); }

FrameBounds estimate_bounds(const std::function<double(const Image&)>& energy,
                            const std::function<Image(std::uint64_t)>& sample, int trials,
                            std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::mt19937_64 rng(seed);
  FrameBounds b{1e300, 0.0};
  for (int t = 0; t < trials; ++t) {
    Image f = sample(rng());
    const double nrm = norm_sq(f);
    if (nrm <= 0) continue;
    const double e = energy(f) / nrm;
    b.lower = std::min(b.lower, e);
    b.upper = std::max(b.upper, e);
  }
  return b;
}

FrameBounds estimate_frame_bounds(const Frame& frame, int trials, std::uint64_t seed) {
  return estimate_bounds(
      [&](const Image& f) {
        double s = 0;
        for (const auto& v : frame.analyze(f).values) s += std::norm(v);
        return s;
      },
      [&](std::uint64_t s) { return random_bandlimited_image(frame.n, frame.covered_radius, s); },
      trials, seed);
}

}  // namespace amol
