#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "amol/frame.hpp"
#include "amol/windows.hpp"

namespace amol {

namespace {

struct Sample {
  int xi1, xi2;
  double w;
};

[[noreturn]] void too_fine(const char* what, int J, int jmax, int n) {
  std::ostringstream os;
  os << what << ": J=" << J << " puts the top band above Nyquist on a " << n << "x" << n
     << " grid; maximal admissible J is " << jmax;
  throw std::invalid_argument(os.str());
}

// Samples a window over a search box, rejecting support beyond Nyquist.
template <class F>
std::vector<Sample> sample_window(F&& window, int r1, int r2, int n) {
  std::vector<Sample> out;
  for (int a = -r1; a <= r1; ++a)
    for (int b = -r2; b <= r2; ++b) {
      const double w = window(a, b);
      if (w == 0.0) continue;
      if (std::abs(a) >= n / 2 || std::abs(b) >= n / 2)
        throw std::invalid_argument("window support reaches the Nyquist frequency");
      out.push_back({a, b, w});
    }
  return out;
}

// Picks an integer dual lattice aligned with the basis columns (b1, b2)
// whose fundamental cell holds the support without aliasing.
void attach_lattice(Band& band, const std::vector<Sample>& pts, const double B[2][2],
                    double oversample, int n) {
  const double det = B[0][0] * B[1][1] - B[0][1] * B[1][0];
  double T1 = 0, T2 = 0;
  for (const auto& p : pts) {
    const double t1 = (B[1][1] * p.xi1 - B[0][1] * p.xi2) / det;
    const double t2 = (-B[1][0] * p.xi1 + B[0][0] * p.xi2) / det;
    T1 = std::max(T1, std::abs(t1));
    T2 = std::max(T2, std::abs(t2));
  }
  const double len1 = std::hypot(B[0][0], B[1][0]), len2 = std::hypot(B[0][1], B[1][1]);
  double c1 = (2 * T1 + 1.0 / len1) * 1.02 / oversample;
  double c2 = (2 * T2 + 1.0 / len2) * 1.02 / oversample;
  std::vector<char> seen;
  for (int attempt = 0; attempt < 200; ++attempt) {
    IntMat2 G{{{std::llround(c1 * B[0][0]), std::llround(c2 * B[0][1])},
               {std::llround(c1 * B[1][0]), std::llround(c2 * B[1][1])}}};
    const std::int64_t d = G[0][0] * G[1][1] - G[0][1] * G[1][0];
    if (d != 0 && std::llabs(d) >= static_cast<std::int64_t>(pts.size())) {
      BandLattice lat(G);
      seen.assign(static_cast<std::size_t>(lat.size()), 0);
      bool ok = true;
      for (const auto& p : pts) {
        auto c = lat.frequency_class(p.xi1, p.xi2);
        if (seen[c]) { ok = false; break; }
        seen[c] = 1;
      }
      if (ok) {
        band.lattice = lat;
        band.norm = 1.0 / std::sqrt(static_cast<double>(lat.size()));
        band.entries.clear();
        band.entries.reserve(pts.size());
        band.box[0] = band.box[2] = n;
        band.box[1] = band.box[3] = -n;
        for (const auto& p : pts) {
          const int g = fft_index(p.xi1, n) * n + fft_index(p.xi2, n);
          band.entries.push_back({g, static_cast<std::int32_t>(lat.frequency_class(p.xi1, p.xi2)), p.w});
          band.box[0] = std::min(band.box[0], p.xi1);
          band.box[1] = std::max(band.box[1], p.xi1);
          band.box[2] = std::min(band.box[2], p.xi2);
          band.box[3] = std::max(band.box[3], p.xi2);
        }
        std::sort(band.entries.begin(), band.entries.end(),
                  [](const BandEntry& a, const BandEntry& b) { return a.grid < b.grid; });
        return;
      }
    }
    c1 *= 1.05;
    c2 *= 1.05;
  }
  throw std::runtime_error("could not find an alias-free translation lattice");
}

void check_common(int J, int n) {
  check_grid(n);
  if (J < 0) throw std::invalid_argument("J must be nonnegative");
}

// Geometry of the shearlet system for a given beta.
struct ShearGeometry {
  double beta, sigma, kappa;
  double eta(int j) const { return std::pow(2.0, -j * (beta - 1) / 2); }
  int range(int j) const { return static_cast<int>(std::ceil(std::pow(2.0, j * (beta - 1) / 2) - 1e-9)); }
  double lowpass(double t) const { return meyer_lowpass(t, kappa); }
  double bandpass(double t) const { return meyer_bandpass(t, sigma, kappa); }
  // Horizontal-cone window of scale j and shear l.
  double horizontal(int j, int l, double xi1, double xi2) const {
    const double r = bandpass(xi1 / std::pow(sigma, j));
    if (r == 0.0) return 0.0;
    return r * shear_bump(xi2 / (xi1 * eta(j)) - l);
  }
  double reach1(int j) const { return std::pow(sigma, j + 1) * kappa; }
  double reach2(int j, int l) const { return reach1(j) * eta(j) * (std::abs(l) + 1); }
};

ShearGeometry shear_geometry(double beta) {
  const double sigma = std::pow(2.0, beta / 2);
  return {beta, sigma, std::sqrt(sigma)};
}

}  // namespace

int max_curvelet_scale(int n, double unit) {
  check_grid(n);
  // top band support radius 2^(J+1) / (8 pi unit) must stay within n/2
  return static_cast<int>(std::floor(std::log2(n / 2.0 * 8 * kPi * unit) + 1e-9)) - 1;
}

int max_wavelet_scale(double sigma, int n) {
  check_grid(n);
  const double kappa = std::sqrt(sigma);
  int J = -1;
  while (std::pow(sigma, J + 2) * kappa < n / 2.0) ++J;
  return J;
}

int max_shearlet_scale(double beta, int n) {
  check_grid(n);
  const ShearGeometry g = shear_geometry(beta);
  int J = -1;
  for (int j = 0; j < 64; ++j) {
    const double reach = std::max(g.reach1(j), g.reach2(j, g.range(j)));
    if (reach >= n / 2.0) break;
    J = j;
  }
  return J;
}

Frame build_curvelet_frame(double alpha, int J, int n, double unit) {
  if (!(unit > 0)) throw std::invalid_argument("frequency unit must be positive");
  if (!(alpha >= 0 && alpha <= 1)) throw std::invalid_argument("alpha must lie in [0,1]");
  check_common(J, n);
  const int jmax = max_curvelet_scale(n, unit);
  if (J > jmax) too_fine("curvelet frame", J, jmax, n);

  // normalizer on the grid in continuum units
  const double g = 8 * kPi * unit;  // grid frequency -> radial profile argument
  std::vector<double> phi(static_cast<std::size_t>(n) * n);
  for (int a = -n / 2; a < n / 2; ++a)
    for (int b = -n / 2; b < n / 2; ++b)
      phi[static_cast<std::size_t>(a + n / 2) * n + (b + n / 2)] = phi_normalizer(alpha, a * unit, b * unit);
  auto phi_at = [&](int a, int b) { return phi[static_cast<std::size_t>(a + n / 2) * n + (b + n / 2)]; };

  Frame fr;
  fr.family = Family::Curvelet;
  fr.id = "curvelet";
  fr.alpha = alpha;
  fr.n = n;
  fr.J = J;
  fr.covered_radius = std::ldexp(1.0, J) / g;
  fr.scale_frequency = 1.0 / g;

  auto shape = [alpha, g](int j, int l, double x1, double x2) {
    const double r = g * std::hypot(x1, x2);
    const double w = j == 0 ? radial_lowpass(r) : radial_bandpass(std::ldexp(r, -j));
    if (w == 0.0) return 0.0;
    return j == 0 ? w : w * angular(alpha, j, l, std::atan2(x2, x1));
  };

  for (int j = 0; j <= J; ++j) {
    const int L = j == 0 ? 1 : curvelet_angles(alpha, j);
    const int R = static_cast<int>(std::ceil(std::ldexp(1.0, j + 1) / g));
    for (int l = 0; l < L; ++l) {
      Band b;
      b.j = j;
      b.l = l;
      b.scale = std::ldexp(1.0, j);
      const double th = j == 0 ? 0.0 : l * curvelet_angle_step(alpha, j);
      b.angle = reduce_angle(th);
      b.window = [shape, alpha, j, l, unit](double x1, double x2) {
        const double s = shape(j, l, x1, x2);
        return s == 0.0 ? 0.0 : s / std::sqrt(phi_normalizer(alpha, x1 * unit, x2 * unit));
      };
      auto pts = sample_window(
          [&](int a, int c) {
            const double s = shape(j, l, a, c);
            if (s == 0.0) return 0.0;
            if (std::abs(a) >= n / 2 || std::abs(c) >= n / 2) return s;
            return s / std::sqrt(phi_at(a, c));
          },
          R, R, n);
      if (pts.empty()) continue;
      // wedge direction e = (cos th, -sin th) and its normal
      const double B[2][2] = {{std::cos(th), std::sin(th)}, {-std::sin(th), std::cos(th)}};
      attach_lattice(b, pts, B, 1.0, n);
      fr.bands.push_back(std::move(b));
    }
  }
  fr.finalize();
  return fr;
}

Frame build_shearlet_frame(double beta, double c, int J, int n) {
  if (!(beta > 1)) throw std::invalid_argument("beta must exceed 1");
  if (!(c > 0 && c <= 1)) throw std::invalid_argument("sampling constant c must lie in (0,1]");
  check_common(J, n);
  const int jmax = max_shearlet_scale(beta, n);
  if (J > jmax) too_fine("shearlet frame", J, jmax, n);
  const ShearGeometry g = shear_geometry(beta);

  Frame fr;
  fr.family = Family::Shearlet;
  fr.id = "shearlet";
  fr.alpha = 1.0 / beta;
  fr.n = n;
  fr.J = J;
  fr.covered_radius = std::pow(g.sigma, J + 1);

  {
    Band b;
    b.eps = 0;
    b.j = -1;
    b.window = [g](double x1, double x2) { return g.lowpass(x1) * g.lowpass(x2); };
    const int R = static_cast<int>(std::ceil(g.kappa));
    auto pts = sample_window([&](int a, int d) { return b.window(a, d); }, R, R, n);
    const double B[2][2] = {{1, 0}, {0, 1}};
    attach_lattice(b, pts, B, c, n);
    fr.bands.push_back(std::move(b));
  }
  for (int j = 0; j <= J; ++j) {
    const int L = g.range(j);
    const double sj = std::pow(g.sigma, j), hj = std::pow(2.0, j / 2.0);
    for (int eps = 0; eps < 2; ++eps)
      for (int l = -L; l <= L; ++l) {
        Band b;
        b.eps = eps;
        b.j = j;
        b.l = l;
        b.scale = sj;
        const double slope = l * g.eta(j);
        b.angle = eps == 0 ? reduce_angle(-std::atan(slope)) : reduce_angle(std::atan(slope) - kPi / 2);
        if (eps == 0)
          b.window = [g, j, l](double x1, double x2) { return g.horizontal(j, l, x1, x2); };
        else
          b.window = [g, j, l](double x1, double x2) { return g.horizontal(j, l, x2, x1); };
        const int r1 = static_cast<int>(std::ceil(g.reach1(j)));
        const int r2 = static_cast<int>(std::ceil(g.reach2(j, l)));
        auto pts = eps == 0 ? sample_window([&](int a, int d) { return b.window(a, d); }, r1, r2, n)
                            : sample_window([&](int a, int d) { return b.window(a, d); }, r2, r1, n);
        // columns of the transposed shear-dilation matrix
        double B[2][2];
        if (eps == 0) {
          B[0][0] = sj; B[1][0] = l * hj; B[0][1] = 0; B[1][1] = hj;
        } else {
          B[0][0] = l * hj; B[1][0] = sj; B[0][1] = hj; B[1][1] = 0;
        }
        attach_lattice(b, pts, B, c, n);
        fr.bands.push_back(std::move(b));
      }
  }
  fr.finalize();
  return fr;
}

Frame build_wavelet_frame(double sigma, double tau, int J, int n) {
  if (!(sigma > 1)) throw std::invalid_argument("sigma must exceed 1");
  if (!(tau > 0 && tau <= 1)) throw std::invalid_argument("tau must lie in (0,1]");
  check_common(J, n);
  const int jmax = max_wavelet_scale(sigma, n);
  if (J > jmax) too_fine("wavelet frame", J, jmax, n);
  const double kappa = std::sqrt(sigma);

  Frame fr;
  fr.family = Family::Wavelet;
  fr.id = "wavelet";
  fr.alpha = 1.0;
  fr.n = n;
  fr.J = J;
  fr.covered_radius = std::pow(sigma, J + 1);

  for (int j = 0; j <= J; ++j) {
    const double sj = std::pow(sigma, j);
    for (int e = (j == 0 ? 0 : 1); e < 4; ++e) {
      const int e1 = e >> 1, e2 = e & 1;
      Band b;
      b.j = j;
      b.l = e;
      b.scale = sj;
      auto prof = [sigma, kappa, sj](int type, double t) {
        return type == 0 ? meyer_lowpass(t / sj, kappa) : meyer_bandpass(t / sj, sigma, kappa);
      };
      b.window = [prof, e1, e2](double x1, double x2) {
        const double a = prof(e1, x1);
        return a == 0.0 ? 0.0 : a * prof(e2, x2);
      };
      const int R = static_cast<int>(std::ceil(sj * sigma * kappa));
      auto pts = sample_window([&](int a, int d) { return b.window(a, d); }, R, R, n);
      const double B[2][2] = {{1, 0}, {0, 1}};
      attach_lattice(b, pts, B, tau, n);
      fr.bands.push_back(std::move(b));
    }
  }
  fr.finalize();
  return fr;
}

}  // namespace amol
