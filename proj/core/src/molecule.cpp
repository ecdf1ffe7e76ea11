#include "amol/molecule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace amol {

double molecule_bound(double alpha, double s, const MoleculeOrder& order, double xi1, double xi2) {
  if (order.L == kInfiniteOrder || order.M == kInfiniteOrder || order.N1 == kInfiniteOrder ||
      order.N2 == kInfiniteOrder)
    throw std::invalid_argument("molecule_bound: replace infinite order entries first");
  const double moment = std::min(1.0, 1.0 / s + std::abs(xi1) + std::pow(s, -(1 - alpha)) * std::abs(xi2));
  const double radial = 1.0 + xi1 * xi1 + xi2 * xi2;
  const double second = 1.0 + xi2 * xi2;
  return std::pow(moment, order.M) * std::pow(radial, -0.5 * order.N1) *
         std::pow(second, -0.5 * order.N2);
}

Generator molecule_generator(const Frame& frame, int band) {
  const Band& b = frame.bands.at(band);
  const double s = b.scale, a = frame.alpha, kappa = frame.scale_frequency;
  const double e1 = std::cos(b.angle), e2 = -std::sin(b.angle);
  const double amp = b.norm * kappa * std::pow(s, (1 + a) / 2);
  const double big = kappa * s, small = kappa * std::pow(s, a);
  Window w = b.window;
  Generator g;
  g.j = b.j;
  g.scale = s;
  g.ghat = [=](double eta1, double eta2) {
    const double u = big * eta1, v = small * eta2;
    return amp * w(u * e1 + v * (-e2), u * e2 + v * e1);
  };
  return g;
}

std::vector<int> default_band_sample(const Frame& frame) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < frame.bands.size()) {
    std::size_t k = i;
    while (k < frame.bands.size() && frame.bands[k].j == frame.bands[i].j) ++k;
    out.push_back(static_cast<int>(i));
    const std::size_t mid = i + (k - i) / 2;
    if (mid != i) out.push_back(static_cast<int>(mid));
    i = k;
  }
  return out;
}

OrderCertificate check_generators(const std::vector<Generator>& gens, double alpha,
                                  const MoleculeOrder& order, int derivative_levels,
                                  const MoleculeCheckOptions& opt) {
  const int n = opt.box_points;
  if (n < 64 || !is_power_of_two(n)) throw std::invalid_argument("box_points must be a power of two >= 64");
  if (derivative_levels < 0) throw std::invalid_argument("derivative_levels must be nonnegative");
  // beyond this the spectral derivative is dominated by the box discretization
  const int max_levels = std::min(6, n / 64);
  if (derivative_levels > max_levels)
    throw std::invalid_argument("derivative_levels exceeds what the eta box resolves (max " +
                                std::to_string(max_levels) + ")");
  if (!(opt.box_radius > 0)) throw std::invalid_argument("box_radius must be positive");

  OrderCertificate cert;
  cert.order = order.with_proxies(kProxyOrder);
  cert.alpha = alpha;
  const int levels = std::min(cert.order.L, derivative_levels);
  for (int t = 0; t <= levels; ++t)
    for (int r1 = t; r1 >= 0; --r1) cert.derivatives.push_back({r1, t - r1});

  const double R = opt.box_radius, h = 2 * R / n;
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  std::vector<double> bound(nn);
  std::vector<char> inner(nn), zero(nn);
  std::vector<cplx> spec(nn), buf(nn);
  std::map<int, ScaleConstant> per_scale;

  for (const auto& g : gens) {
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        const double x1 = -R + a * h, x2 = -R + c * h;
        const std::size_t i = static_cast<std::size_t>(a) * n + c;
        spec[i] = g.ghat(x1, x2);
        bound[i] = molecule_bound(alpha, g.scale, cert.order, x1, x2);
        inner[i] = std::max(std::abs(x1), std::abs(x2)) <= R / 2;
      }
    // derivatives vanish exactly where the generator vanishes on a neighbourhood
    {
      constexpr int m = 2;
      std::vector<char> nz(nn), rows(nn);
      for (std::size_t i = 0; i < nn; ++i) nz[i] = spec[i] != cplx{};
      for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
          char any = 0;
          for (int d = -m; d <= m && !any; ++d) any = nz[static_cast<std::size_t>(a) * n + (c + d + n) % n];
          rows[static_cast<std::size_t>(a) * n + c] = any;
        }
      for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
          char any = 0;
          for (int d = -m; d <= m && !any; ++d) any = rows[static_cast<std::size_t>((a + d + n) % n) * n + c];
          zero[static_cast<std::size_t>(a) * n + c] = !any;
        }
    }
    fft2_inplace(spec.data(), n, n, -1);
    for (auto& v : spec) v /= static_cast<double>(nn);

    auto& sc = per_scale[g.j];
    sc.j = g.j;
    sc.per_derivative.resize(cert.derivatives.size(), 0.0);
    for (std::size_t d = 0; d < cert.derivatives.size(); ++d) {
      const int r1 = cert.derivatives[d][0], r2 = cert.derivatives[d][1];
      for (int a = 0; a < n; ++a) {
        const int k1 = centered(a, n);
        const cplx f1 = (k1 == -n / 2 && r1 % 2) ? 0.0 : std::pow(cplx(0, 2 * kPi * k1 / (2 * R)), r1);
        for (int c = 0; c < n; ++c) {
          const int k2 = centered(c, n);
          const cplx f2 = (k2 == -n / 2 && r2 % 2) ? 0.0 : std::pow(cplx(0, 2 * kPi * k2 / (2 * R)), r2);
          const std::size_t i = static_cast<std::size_t>(a) * n + c;
          buf[i] = spec[i] * f1 * f2;
        }
      }
      fft2_inplace(buf.data(), n, n, +1);
      double full = 0, in = 0;
      for (std::size_t i = 0; i < nn; ++i) {
        if (zero[i]) continue;
        const double q = std::abs(buf[i].real()) / bound[i];
        full = std::max(full, q);
        if (inner[i]) in = std::max(in, q);
      }
      if (full > opt.saturation * in && full > 1e-12) cert.saturated = false;
      sc.per_derivative[d] = std::max(sc.per_derivative[d], full);
      sc.constant = std::max(sc.constant, full);
    }
  }

  double lo = std::numeric_limits<double>::infinity(), hi = 0;
  for (auto& [j, sc] : per_scale) {
    cert.scales.push_back(sc);
    lo = std::min(lo, sc.constant);
    hi = std::max(hi, sc.constant);
  }
  if (hi == 0)
    cert.ratio = 1.0;
  else
    cert.ratio = lo > 0 ? hi / lo : std::numeric_limits<double>::infinity();
  cert.pass = cert.saturated && cert.ratio <= opt.ratio_threshold;
  return cert;
}

OrderCertificate check_generator(const Frame& frame, const std::vector<int>& bands,
                                 const MoleculeOrder& order, int derivative_levels,
                                 const MoleculeCheckOptions& opt) {
  std::vector<Generator> gens;
  for (int b : bands) gens.push_back(molecule_generator(frame, b));
  return check_generators(gens, frame.alpha, order, derivative_levels, opt);
}

}  // namespace amol
