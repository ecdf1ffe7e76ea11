#pragma once

#include <cstdint>
#include <vector>

#include "amol/grid.hpp"
#include "amol/param.hpp"

namespace amol {

// amp * cos(2 pi (p x1 + q x2) + phase)
struct TrigTerm {
  double amp = 0.0;
  int p = 0;
  int q = 0;
  double phase = 0.0;
};

double eval_trig(const std::vector<TrigTerm>& terms, double x1, double x2);

// f0 + f1 * indicator(B), B star-shaped about `center` with radius
// rho(phi) = r0 + sum_m a_m cos(m phi + phi_m), m = 1..a.size().
struct CartoonSpec {
  double beta = 2.0;
  std::vector<TrigTerm> f0;
  std::vector<TrigTerm> f1;
  Vec2 center{0.5, 0.5};
  double r0 = 0.3;
  std::vector<double> amps;
  std::vector<double> phases;
  double envelope = 0.06;     // A in |a_m| <= A m^-(beta+1+eps)
  double envelope_eps = 0.2;  // eps above
  std::uint64_t seed = 0;

  double radius(double phi) const;
  double radius_derivative_bound() const;
  bool envelope_ok() const;
};

struct CartoonOptions {
  int modes = 64;
  double r0 = 0.3;
  double envelope = 0.06;
  double envelope_eps = 0.2;
};

CartoonSpec random_cartoon_spec(double beta, std::uint64_t seed, const CartoonOptions& opt = {});
CartoonSpec disc_spec(double radius, Vec2 center = {0.5, 0.5});

// Throws if rho <= 0 somewhere or B leaves the unit square.
void validate(const CartoonSpec& spec);

// 4x4 subpixel area sampling of the indicator.
Image generate_cartoon(const CartoonSpec& spec, int n);

// Hoelder exponent read off the decay of the boundary's Fourier
// coefficients; saturates at `cap` for (nearly) trigonometric boundaries.
double boundary_regularity_estimate(const CartoonSpec& spec, double cap = 10.0);

}  // namespace amol
