#pragma once

#include <array>
#include <functional>
#include <vector>

#include "amol/frame.hpp"
#include "amol/param.hpp"

namespace amol {

// min{1, 1/s + |xi1| + s^-(1-alpha) |xi2|}^M <|xi|>^-N1 <xi2>^-N2.
// Infinite order entries must be replaced before calling.
double molecule_bound(double alpha, double s, const MoleculeOrder& order, double xi1, double xi2);

// Normalized generator of one molecule in its own frequency variable eta.
struct Generator {
  int j = 0;
  double scale = 1.0;
  std::function<double(double, double)> ghat;
};

// ghat(eta) = s^((1+alpha)/2) * mhat(xi), xi = scale_frequency * R A eta, with
// A = diag(s, s^alpha) and R turning the first axis onto the band direction.
Generator molecule_generator(const Frame& frame, int band);

// Per scale: the first band and one band from the middle of the scale's range.
std::vector<int> default_band_sample(const Frame& frame);

struct MoleculeCheckOptions {
  int box_points = 512;       // samples per axis of the eta box
  double box_radius = 12.0;   // eta box is [-r, r)^2
  double ratio_threshold = 4.0;
  double saturation = 1.5;    // allowed growth of a constant from the inner half-box to the full box
};

struct ScaleConstant {
  int j = 0;
  double constant = 0.0;     // max over sampled generators and derivatives
  std::vector<double> per_derivative;  // same order as OrderCertificate::derivatives
};

struct OrderCertificate {
  MoleculeOrder order;  // tested (finite) order
  double alpha = 0.5;
  std::vector<std::array<int, 2>> derivatives;
  std::vector<ScaleConstant> scales;
  double ratio = 1.0;      // max/min of the per-scale constants
  bool saturated = true;   // no constant is still growing at the box edge
  bool pass = false;
};

OrderCertificate check_generators(const std::vector<Generator>& gens, double alpha,
                                  const MoleculeOrder& order, int derivative_levels,
                                  const MoleculeCheckOptions& opt = {});

// Infinite order entries are tested at kProxyOrder. Derivatives up to
// min(order.L, derivative_levels) are checked.
OrderCertificate check_generator(const Frame& frame, const std::vector<int>& bands,
                                 const MoleculeOrder& order, int derivative_levels,
                                 const MoleculeCheckOptions& opt = {});

}  // namespace amol
