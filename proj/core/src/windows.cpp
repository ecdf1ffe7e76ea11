#include "amol/windows.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "amol/param.hpp"

namespace amol {

namespace {
double expo(double t) { return t > 0 ? std::exp(-1.0 / t) : 0.0; }

double wrap_pi(double phi) {
  double r = std::fmod(phi + kPi, 2 * kPi);
  if (r < 0) r += 2 * kPi;
  return r - kPi;
}
}  // namespace

double smooth_step(double t) {
  if (t <= 0) return 0.0;
  if (t >= 1) return 1.0;
  const double a = expo(t), b = expo(1 - t);
  return a / (a + b);
}

double radial_lowpass(double r) { return smooth_step((2.0 - r) / 0.5); }

double radial_bandpass(double r) {
  if (r <= 0.5 || r >= 2.0) return 0.0;
  if (r < 0.75) return smooth_step((r - 0.5) / 0.25);
  if (r <= 1.5) return 1.0;
  return smooth_step((2.0 - r) / 0.5);
}

double radial_band(int j, double r) {
  if (j < 0) throw std::invalid_argument("radial_band: negative scale");
  const double u = 8 * kPi * r;
  return j == 0 ? radial_lowpass(u) : radial_bandpass(std::ldexp(u, -j));
}

double angular_base(double t) {
  return smooth_step((0.75 * kPi - std::abs(t)) / (0.25 * kPi));
}

int curvelet_angles(double alpha, int j) {
  return 1 << static_cast<int>(std::floor(j * (1 - alpha) + 1e-12));
}

double curvelet_angle_step(double alpha, int j) { return kPi / curvelet_angles(alpha, j); }

double angular(double alpha, int j, int l, double phi) {
  const int L = curvelet_angles(alpha, j);
  if (l < 0 || l >= L) throw std::invalid_argument("angular: index out of range");
  const double p = wrap_pi(phi + l * curvelet_angle_step(alpha, j));
  const double q = wrap_pi(p + kPi);
  return angular_base(L * p) + angular_base(L * q);
}

double phi_normalizer(double alpha, double xi1, double xi2) {
  const double r = std::hypot(xi1, xi2);
  const double w0 = radial_band(0, r);
  double total = w0 * w0;
  if (r == 0) return total;
  const double u = 8 * kPi * r;
  const double phi = std::atan2(xi2, xi1);
  const int jc = static_cast<int>(std::floor(std::log2(u)));
  for (int j = std::max(1, jc - 1); j <= jc + 2; ++j) {
    const double w = radial_band(j, r);
    if (w == 0) continue;
    double s = 0;
    for (int l = 0, L = curvelet_angles(alpha, j); l < L; ++l) {
      const double v = angular(alpha, j, l, phi);
      s += v * v;
    }
    total += w * w * s;
  }
  return total;
}

double phi_normalizer_all(double alpha, double xi1, double xi2, int max_j) {
  const double r = std::hypot(xi1, xi2);
  const double phi = std::atan2(xi2, xi1);
  double total = std::pow(radial_band(0, r), 2);
  for (int j = 1; j <= max_j; ++j) {
    const double w = radial_band(j, r);
    for (int l = 0, L = curvelet_angles(alpha, j); l < L; ++l)
      total += w * w * std::pow(angular(alpha, j, l, phi), 2);
  }
  return total;
}

double meyer_lowpass(double t, double kappa) {
  return std::sqrt(smooth_step(1.0 - (std::abs(t) - 1.0) / (kappa - 1.0)));
}

double meyer_bandpass(double t, double sigma, double kappa) {
  const double x1 = (std::abs(t) - 1.0) / (kappa - 1.0);
  const double x2 = (std::abs(t) / sigma - 1.0) / (kappa - 1.0);
  // disjoint transitions: evaluate each side without cancellation
  if (kappa <= sigma) return std::sqrt(x2 <= 0 ? smooth_step(x1) : smooth_step(1.0 - x2));
  return std::sqrt(std::max(0.0, smooth_step(x1) - smooth_step(x2)));
}

double shear_bump(double u) { return std::sqrt(smooth_step(1 + u) * smooth_step(1 - u)); }

}  // namespace amol
