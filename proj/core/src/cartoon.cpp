#include "amol/cartoon.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace amol {

double eval_trig(const std::vector<TrigTerm>& terms, double x1, double x2) {
  double s = 0;
  for (const auto& t : terms) s += t.amp * std::cos(2 * kPi * (t.p * x1 + t.q * x2) + t.phase);
  return s;
}

double CartoonSpec::radius(double phi) const {
  double r = r0;
  for (std::size_t m = 0; m < amps.size(); ++m)
    r += amps[m] * std::cos((m + 1.0) * phi + phases[m]);
  return r;
}

double CartoonSpec::radius_derivative_bound() const {
  double s = 0;
  for (std::size_t m = 0; m < amps.size(); ++m) s += (m + 1.0) * std::abs(amps[m]);
  return s;
}

bool CartoonSpec::envelope_ok() const {
  for (std::size_t m = 0; m < amps.size(); ++m)
    if (std::abs(amps[m]) > envelope * std::pow(m + 1.0, -(beta + 1 + envelope_eps)) * (1 + 1e-12))
      return false;
  return true;
}

CartoonSpec random_cartoon_spec(double beta, std::uint64_t seed, const CartoonOptions& opt) {
  if (!(beta > 1 && beta <= 2)) throw std::invalid_argument("beta must lie in (1,2]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CartoonSpec s;
  s.beta = beta;
  s.seed = seed;
  s.r0 = opt.r0;
  s.envelope = opt.envelope;
  s.envelope_eps = opt.envelope_eps;
  for (int m = 1; m <= opt.modes; ++m) {
    const double cap = opt.envelope * std::pow(m, -(beta + 1 + opt.envelope_eps));
    s.amps.push_back(cap * (0.5 + 0.5 * unit(rng)));
    s.phases.push_back(2 * kPi * unit(rng));
  }
  s.f0.push_back({0.2, 0, 0, 0.0});
  s.f1.push_back({1.0, 0, 0, 0.0});
  for (int p = -1; p <= 1; ++p)
    for (int q = 0; q <= 1; ++q) {
      if (q == 0 && p <= 0) continue;
      s.f0.push_back({0.1 * (unit(rng) - 0.5), p, q, 2 * kPi * unit(rng)});
      s.f1.push_back({0.2 * (unit(rng) - 0.5), p, q, 2 * kPi * unit(rng)});
    }
  validate(s);
  return s;
}

CartoonSpec disc_spec(double radius, Vec2 center) {
  CartoonSpec s;
  s.r0 = radius;
  s.center = center;
  s.f1.push_back({1.0, 0, 0, 0.0});
  return s;
}

void validate(const CartoonSpec& s) {
  if (s.amps.size() != s.phases.size()) throw std::invalid_argument("amplitude/phase count mismatch");
  const int samples = 4096;
  for (int i = 0; i < samples; ++i) {
    const double phi = 2 * kPi * i / samples;
    const double r = s.radius(phi);
    if (!(r > 0)) throw std::invalid_argument("boundary radius must stay positive");
    const double x = s.center.x + r * std::cos(phi), y = s.center.y + r * std::sin(phi);
    if (x < 0 || x > 1 || y < 0 || y > 1)
      throw std::invalid_argument("domain leaves the unit square");
  }
}

Image generate_cartoon(const CartoonSpec& s, int n) {
  check_grid(n);
  validate(s);
  Image f(n);
  const double h = 1.0 / n;
  const double reach = std::sqrt(0.5) * h;
  const double slope = s.radius_derivative_bound();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const double x1 = a * h, x2 = b * h;
      const double d1 = x1 - s.center.x, d2 = x2 - s.center.y;
      const double r = std::hypot(d1, d2);
      double cover;
      const double gap = r - s.radius(std::atan2(d2, d1));
      if (r > reach && std::abs(gap) > reach * (1 + slope / (r - reach))) {
        cover = gap < 0 ? 1.0 : 0.0;
      } else {
        int inside = 0;
        for (int u = 0; u < 4; ++u)
          for (int v = 0; v < 4; ++v) {
            const double y1 = d1 + ((u + 0.5) / 4 - 0.5) * h;
            const double y2 = d2 + ((v + 0.5) / 4 - 0.5) * h;
            if (std::hypot(y1, y2) < s.radius(std::atan2(y2, y1))) ++inside;
          }
        cover = inside / 16.0;
      }
      double v = eval_trig(s.f0, x1, x2);
      if (cover > 0) v += cover * eval_trig(s.f1, x1, x2);
      f.at(a, b) = v;
    }
  return f;
}

double boundary_regularity_estimate(const CartoonSpec& s, double cap) {
  const int M = 4096;
  std::vector<cplx> buf(M);
  for (int i = 0; i < M; ++i) buf[i] = s.radius(2 * kPi * i / M);
  fft2_inplace(buf.data(), 1, M, -1);
  std::vector<double> lx, ly;
  const double floor = 1e-13 * std::max(1.0, std::abs(s.r0));
  for (int m = 1; m < M / 2; ++m) {
    const double mag = std::abs(buf[m]) / M;
    if (mag > floor) {
      lx.push_back(std::log(m));
      ly.push_back(std::log(mag));
    }
  }
  if (lx.size() < 3) return cap;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) mx += lx[i], my += ly[i];
  mx /= lx.size();
  my /= lx.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  if (sxx <= 0) return cap;
  const double decay = -sxy / sxx;
  return std::min(cap, decay - 1.0 - s.envelope_eps);
}

}  // namespace amol
