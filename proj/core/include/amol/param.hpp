#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <variant>

namespace amol {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// Point of the phase space: scale, orientation modulo pi, location.
struct ParamPoint {
  double scale = 1.0;
  double angle = 0.0;
  Vec2 location{};
};

// Infinite entries are stored as kInfiniteOrder.
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

struct MoleculeOrder {
  int L = 0;
  int M = 0;
  int N1 = 0;
  int N2 = 0;

  // Replaces infinite entries by the given test levels.
  MoleculeOrder with_proxies(const MoleculeOrder& proxy) const;
  bool operator==(const MoleculeOrder&) const = default;
};

// Default finite stand-in for order (inf, inf, inf, inf).
inline constexpr MoleculeOrder kProxyOrder{2, 8, 6, 4};

double reduce_angle(double theta);
double angle_diff(double theta1, double theta2);

// Asymmetric: the third term uses the orientation of p.
double index_distance_d(double alpha, const ParamPoint& p, const ParamPoint& q);
double omega_distance(double alpha, const ParamPoint& p, const ParamPoint& q);

// Same as above on a torus of side `period`, minimized over periodic images.
double index_distance_d_periodic(double alpha, const ParamPoint& p, const ParamPoint& q,
                                 double period);
double omega_distance_periodic(double alpha, const ParamPoint& p, const ParamPoint& q,
                               double period);

// Generic index tuple. Wavelets store the tensor type e as l = 2*e1 + e2.
struct Index {
  int eps = 0;
  int j = 0;
  int l = 0;
  std::int64_t k1 = 0;
  std::int64_t k2 = 0;
  bool operator==(const Index&) const = default;
};

struct Truncation {
  int max_scale = 0;
  double window = 1.0;  // locations enumerated in [0, window)^2
};

// Angle step rule for curvelet-type parametrizations.
//  dyadic:       L_j = 2^floor(j(1-alpha)), step = pi / L_j (needs sigma = 2)
//  proportional: step = omega0 * sigma^(-j(1-alpha)), L_j = ceil(pi / step)
struct AngleRule {
  enum class Kind { Dyadic, Proportional };
  Kind kind = Kind::Dyadic;
  double omega0 = kPi;
};

struct CurveletParametrization {
  double alpha = 0.5;
  double sigma = 2.0;
  double tau = 1.0;
  AngleRule angle_rule{};

  int angles(int j) const;
  double angle_step(int j) const;
  ParamPoint point(int j, int l, std::int64_t k1, std::int64_t k2) const;
};

// eta_j = eta0 * sigma^(-j(1-alpha)), |l| <= ceil(range0 * sigma^(j(1-alpha))).
struct ShearRule {
  double eta0 = 1.0;
  double range0 = 1.0;
};

struct ShearletParametrization {
  double alpha = 0.5;
  double sigma = 2.0;
  double tau = 1.0;
  ShearRule shear_rule{};

  double shear_step(int j) const;
  int shear_range(int j) const;
  // Coarse indices use j = -1, eps = 0, l = 0.
  ParamPoint point(int eps, int j, int l, std::int64_t k1, std::int64_t k2) const;
};

struct WaveletParametrization {
  double sigma = 2.0;
  double tau = 1.0;
  // e encoded as 2*e1 + e2; e = 0 only at j = 0.
  ParamPoint point(int e, int j, std::int64_t k1, std::int64_t k2) const;
};

struct Parametrization {
  std::variant<CurveletParametrization, ShearletParametrization, WaveletParametrization> family;
  Truncation truncation{};

  std::string kind() const;
  double alpha() const;
};

Parametrization make_curvelet_parametrization(double alpha, double sigma = 2.0, double tau = 1.0);
Parametrization make_shearlet_parametrization(double alpha, double sigma = 2.0, double tau = 1.0);
Parametrization make_wavelet_parametrization(double sigma = 2.0, double tau = 1.0);

using IndexVisitor = std::function<void(const Index&, const ParamPoint&)>;

// Streams all indices with j <= max_scale_index whose location lies in
// [0, window)^2, ordered by (j, eps, l, k1, k2).
void enumerate_indices(const Parametrization& par, int max_scale_index, double window,
                       const IndexVisitor& visit);
void enumerate_indices(const Parametrization& par, const IndexVisitor& visit);

// Visits the indices of one scale only (the coarse shearlet scale is j = -1).
void enumerate_scale(const Parametrization& par, int j, double window,
                     const IndexVisitor& visit);

// Smallest scale index used by the family (-1 for shearlets, 0 otherwise).
int min_scale_index(const Parametrization& par);

}  // namespace amol
