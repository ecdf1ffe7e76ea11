#include "amol/param.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace amol {

MoleculeOrder MoleculeOrder::with_proxies(const MoleculeOrder& proxy) const {
  auto pick = [](int v, int p) { return v == kInfiniteOrder ? p : v; };
  return {pick(L, proxy.L), pick(M, proxy.M), pick(N1, proxy.N1), pick(N2, proxy.N2)};
}

double reduce_angle(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("reduce_angle: non-finite angle");
  double r = theta - kPi * std::floor((theta + kPi / 2) / kPi);
  if (r >= kPi / 2) r -= kPi;
  if (r < -kPi / 2) r += kPi;
  return r;
}

double angle_diff(double theta1, double theta2) {
  return std::abs(reduce_angle(theta1 - theta2));
}

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0,1]");
}

double wrap_half(double d, double period) {
  return d - period * std::round(d / period);
}

double distance_core(double alpha, const ParamPoint& p, const ParamPoint& q, double dx,
                     double dy) {
  check_alpha(alpha);
  if (!(p.scale > 0 && q.scale > 0)) throw std::invalid_argument("scales must be positive");
  const double s0 = std::min(p.scale, q.scale);
  const double dth = angle_diff(p.angle, q.angle);
  const double a = std::pow(s0, 2 * (1 - alpha)) * dth * dth;
  const double ex = std::cos(p.angle);
  const double ey = -std::sin(p.angle);
  const double along = ex * dx + ey * dy;
  return a + std::pow(s0, 2 * alpha) * (dx * dx + dy * dy) + s0 * s0 * along * along / (1 + a);
}

double ratio(const ParamPoint& p, const ParamPoint& q) {
  return std::max(p.scale / q.scale, q.scale / p.scale);
}

}  // namespace

double index_distance_d(double alpha, const ParamPoint& p, const ParamPoint& q) {
  return distance_core(alpha, p, q, p.location.x - q.location.x, p.location.y - q.location.y);
}

double omega_distance(double alpha, const ParamPoint& p, const ParamPoint& q) {
  return ratio(p, q) * (1 + index_distance_d(alpha, p, q));
}

double index_distance_d_periodic(double alpha, const ParamPoint& p, const ParamPoint& q,
                                 double period) {
  if (!(period > 0)) throw std::invalid_argument("period must be positive");
  const double dx = wrap_half(p.location.x - q.location.x, period);
  const double dy = wrap_half(p.location.y - q.location.y, period);
  // anisotropic distance: the nearest image in d need not be the nearest in |dx|
  double best = std::numeric_limits<double>::infinity();
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      best = std::min(best, distance_core(alpha, p, q, dx + a * period, dy + b * period));
  return best;
}

double omega_distance_periodic(double alpha, const ParamPoint& p, const ParamPoint& q,
                               double period) {
  return ratio(p, q) * (1 + index_distance_d_periodic(alpha, p, q, period));
}

// ---- curvelet ----

int CurveletParametrization::angles(int j) const {
  if (j < 0) throw std::invalid_argument("negative scale index");
  if (angle_rule.kind == AngleRule::Kind::Dyadic)
    return 1 << static_cast<int>(std::floor(j * (1 - alpha) + 1e-12));
  return std::max(1, static_cast<int>(std::ceil(kPi / angle_step(j) - 1e-9)));
}

double CurveletParametrization::angle_step(int j) const {
  if (angle_rule.kind == AngleRule::Kind::Dyadic) return kPi / angles(j);
  return angle_rule.omega0 * std::pow(sigma, -j * (1 - alpha));
}

ParamPoint CurveletParametrization::point(int j, int l, std::int64_t k1, std::int64_t k2) const {
  const double th = l * angle_step(j);
  const double a1 = tau * std::pow(sigma, -j) * static_cast<double>(k1);
  const double a2 = tau * std::pow(sigma, -j * alpha) * static_cast<double>(k2);
  // R_{-th} applied to (a1, a2)
  const double c = std::cos(th), s = std::sin(th);
  return {std::pow(sigma, j), reduce_angle(th), {c * a1 + s * a2, -s * a1 + c * a2}};
}

// ---- shearlet ----

double ShearletParametrization::shear_step(int j) const {
  return shear_rule.eta0 * std::pow(sigma, -j * (1 - alpha));
}

int ShearletParametrization::shear_range(int j) const {
  return static_cast<int>(std::ceil(shear_rule.range0 * std::pow(sigma, j * (1 - alpha)) - 1e-9));
}

ParamPoint ShearletParametrization::point(int eps, int j, int l, std::int64_t k1,
                                          std::int64_t k2) const {
  if (j < 0) return {1.0, 0.0, {tau * static_cast<double>(k1), tau * static_cast<double>(k2)}};
  const double h = l * shear_step(j);
  const double big = std::pow(sigma, -j), small = std::pow(sigma, -j * alpha);
  const double kk1 = tau * static_cast<double>(k1), kk2 = tau * static_cast<double>(k2);
  ParamPoint pt;
  pt.scale = std::pow(sigma, j);
  if (eps == 0) {
    const double a1 = big * kk1, a2 = small * kk2;
    pt.location = {a1 - h * a2, a2};
    pt.angle = reduce_angle(std::atan(-h));
  } else {
    const double a1 = small * kk1, a2 = big * kk2;
    pt.location = {a1, a2 - h * a1};
    pt.angle = reduce_angle(kPi / 2 + std::atan(-h));
  }
  return pt;
}

// ---- wavelet ----

ParamPoint WaveletParametrization::point(int /*e*/, int j, std::int64_t k1,
                                         std::int64_t k2) const {
  const double f = tau * std::pow(sigma, -j);
  return {std::pow(sigma, j), 0.0, {f * static_cast<double>(k1), f * static_cast<double>(k2)}};
}

// ---- container ----

std::string Parametrization::kind() const {
  switch (family.index()) {
    case 0: return "curvelet";
    case 1: return "shearlet";
    default: return "wavelet";
  }
}

double Parametrization::alpha() const {
  if (auto* c = std::get_if<CurveletParametrization>(&family)) return c->alpha;
  if (auto* s = std::get_if<ShearletParametrization>(&family)) return s->alpha;
  return 1.0;
}

Parametrization make_curvelet_parametrization(double alpha, double sigma, double tau) {
  check_alpha(alpha);
  if (!(sigma > 1) || !(tau > 0)) throw std::invalid_argument("need sigma > 1 and tau > 0");
  CurveletParametrization c{alpha, sigma, tau, {}};
  if (std::abs(sigma - 2.0) > 1e-12) c.angle_rule = {AngleRule::Kind::Proportional, kPi};
  return {c, {}};
}

Parametrization make_shearlet_parametrization(double alpha, double sigma, double tau) {
  check_alpha(alpha);
  if (!(sigma > 1) || !(tau > 0)) throw std::invalid_argument("need sigma > 1 and tau > 0");
  return {ShearletParametrization{alpha, sigma, tau, {}}, {}};
}

Parametrization make_wavelet_parametrization(double sigma, double tau) {
  if (!(sigma > 1) || !(tau > 0)) throw std::invalid_argument("need sigma > 1 and tau > 0");
  return {WaveletParametrization{sigma, tau}, {}};
}

int min_scale_index(const Parametrization& par) {
  return std::holds_alternative<ShearletParametrization>(par.family) ? -1 : 0;
}

namespace {

// Visits k with x = T k in [0, w)^2, k lexicographic.
template <class F>
void lattice_in_window(const double T[2][2], double w, F&& f) {
  const double det = T[0][0] * T[1][1] - T[0][1] * T[1][0];
  const double inv[2][2] = {{T[1][1] / det, -T[0][1] / det}, {-T[1][0] / det, T[0][0] / det}};
  double lo[2] = {1e300, 1e300}, hi[2] = {-1e300, -1e300};
  for (double cx : {0.0, w})
    for (double cy : {0.0, w})
      for (int r = 0; r < 2; ++r) {
        const double v = inv[r][0] * cx + inv[r][1] * cy;
        lo[r] = std::min(lo[r], v);
        hi[r] = std::max(hi[r], v);
      }
  const auto k1lo = static_cast<std::int64_t>(std::floor(lo[0])) - 1;
  const auto k1hi = static_cast<std::int64_t>(std::ceil(hi[0])) + 1;
  const auto k2lo = static_cast<std::int64_t>(std::floor(lo[1])) - 1;
  const auto k2hi = static_cast<std::int64_t>(std::ceil(hi[1])) + 1;
  for (auto k1 = k1lo; k1 <= k1hi; ++k1)
    for (auto k2 = k2lo; k2 <= k2hi; ++k2) {
      const double x = T[0][0] * k1 + T[0][1] * k2;
      const double y = T[1][0] * k1 + T[1][1] * k2;
      if (x >= 0 && x < w && y >= 0 && y < w) f(k1, k2);
    }
}

}  // namespace

void enumerate_scale(const Parametrization& par, int j, double window,
                     const IndexVisitor& visit) {
  if (auto* c = std::get_if<CurveletParametrization>(&par.family)) {
    if (j < 0) return;
    const int L = c->angles(j);
    const double a1 = c->tau * std::pow(c->sigma, -j);
    const double a2 = c->tau * std::pow(c->sigma, -j * c->alpha);
    for (int l = 0; l < L; ++l) {
      const double th = l * c->angle_step(j);
      const double cs = std::cos(th), sn = std::sin(th);
      const double T[2][2] = {{cs * a1, sn * a2}, {-sn * a1, cs * a2}};
      lattice_in_window(T, window, [&](std::int64_t k1, std::int64_t k2) {
        visit({0, j, l, k1, k2}, c->point(j, l, k1, k2));
      });
    }
  } else if (auto* s = std::get_if<ShearletParametrization>(&par.family)) {
    if (j < -1) return;
    if (j == -1) {
      const double T[2][2] = {{s->tau, 0}, {0, s->tau}};
      lattice_in_window(T, window, [&](std::int64_t k1, std::int64_t k2) {
        visit({0, -1, 0, k1, k2}, s->point(0, -1, 0, k1, k2));
      });
      return;
    }
    const int L = s->shear_range(j);
    const double big = s->tau * std::pow(s->sigma, -j);
    const double small = s->tau * std::pow(s->sigma, -j * s->alpha);
    for (int eps = 0; eps < 2; ++eps)
      for (int l = -L; l <= L; ++l) {
        const double h = l * s->shear_step(j);
        double T[2][2];
        if (eps == 0) {
          T[0][0] = big; T[0][1] = -h * small; T[1][0] = 0; T[1][1] = small;
        } else {
          T[0][0] = small; T[0][1] = 0; T[1][0] = -h * small; T[1][1] = big;
        }
        lattice_in_window(T, window, [&](std::int64_t k1, std::int64_t k2) {
          visit({eps, j, l, k1, k2}, s->point(eps, j, l, k1, k2));
        });
      }
  } else {
    const auto& w = std::get<WaveletParametrization>(par.family);
    if (j < 0) return;
    const double f = w.tau * std::pow(w.sigma, -j);
    const double T[2][2] = {{f, 0}, {0, f}};
    for (int e = (j == 0 ? 0 : 1); e < 4; ++e)
      lattice_in_window(T, window, [&](std::int64_t k1, std::int64_t k2) {
        visit({0, j, e, k1, k2}, w.point(e, j, k1, k2));
      });
  }
}

void enumerate_indices(const Parametrization& par, int max_scale_index, double window,
                       const IndexVisitor& visit) {
  if (!(window > 0) || !std::isfinite(window))
    throw std::invalid_argument("translation window must be positive and finite");
  for (int j = min_scale_index(par); j <= max_scale_index; ++j)
    enumerate_scale(par, j, window, visit);
}

void enumerate_indices(const Parametrization& par, const IndexVisitor& visit) {
  enumerate_indices(par, par.truncation.max_scale, par.truncation.window, visit);
}

}  // namespace amol
