#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "amol/grid.hpp"
#include "amol/lattice.hpp"
#include "amol/param.hpp"

namespace amol {

enum class Family { Curvelet, Shearlet, Wavelet };

std::string family_name(Family f);

// One nonzero sample of a band window on the grid.
struct BandEntry {
  std::int32_t grid;  // flat FFT-order index
  std::int32_t cls;   // alias class in the band lattice
  double w;
};

// Frequency window in integer frequency units (xi1, xi2).
using Window = std::function<double(double, double)>;

struct Band {
  int eps = 0;
  int j = 0;
  int l = 0;  // wavelets: tensor type e encoded as 2*e1 + e2
  double scale = 1.0;
  double angle = 0.0;
  Window window;
  BandLattice lattice;
  double norm = 1.0;  // 1/sqrt(#translates)
  std::vector<BandEntry> entries;  // sorted by grid index
  int box[4] = {0, 0, 0, 0};       // xi1 min, xi1 max, xi2 min, xi2 max
  std::int64_t offset = 0;         // first flat coefficient index

  std::int64_t count() const { return lattice.size(); }
};

struct CoefficientSet {
  std::string frame_id;
  int n = 0;
  std::vector<cplx> values;  // flat, band-major, k1-major within a band
};

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

class Frame {
 public:
  Family family = Family::Curvelet;
  std::string id;
  double alpha = 0.5;
  int n = 0;
  int J = 0;
  // Radius of the disc on which the frame operator symbol is bounded below
  // by symbol_bounds.lower (and equals one for the tight constructions).
  double covered_radius = 0.0;
  // Grid frequency that corresponds to scale 1 of the band windows.
  double scale_frequency = 1.0;
  std::vector<Band> bands;

  std::int64_t size() const { return total_; }

  CoefficientSet analyze(const Image& f) const;
  CoefficientSet analyze(const Spectrum& fhat) const;
  // Adjoint of analyze.
  Spectrum synthesize_spectrum(const CoefficientSet& c) const;
  Image synthesize(const CoefficientSet& c) const;
  // Canonical dual reconstruction; the symbol is floored at its lower
  // bound outside the covered disc.
  Image reconstruct(const CoefficientSet& c) const;
  Spectrum reconstruct_spectrum(const CoefficientSet& c) const;

  // Sum over bands of squared windows at each grid frequency (FFT order).
  const std::vector<double>& symbol() const { return symbol_; }
  FrameBounds symbol_bounds() const { return bounds_; }

  // Element lookup by flat coefficient index.
  int band_of(std::int64_t flat) const;
  Index index_of(std::int64_t flat) const;
  Vec2 location_of(std::int64_t flat) const;
  ParamPoint point_of(std::int64_t flat) const;
  std::int64_t flat_index(int band, std::int64_t k1, std::int64_t k2) const;
  double element_norm_sq(int band) const;
  Spectrum element_spectrum(std::int64_t flat) const;
  // Spatial samples of one element (real for symmetric windows).
  Image element_image(std::int64_t flat) const;

  // Called by the builders once bands are filled.
  void finalize();

 private:
  std::int64_t total_ = 0;
  std::vector<double> symbol_;
  FrameBounds bounds_{};
};

// Largest scale counts that keep the top band below the Nyquist frequency.
int max_curvelet_scale(int n, double unit = 1.0 / (8 * kPi));
int max_shearlet_scale(double beta, int n);
int max_wavelet_scale(double sigma, int n);

// `unit` converts grid frequencies to the continuum frequencies of the
// window construction; the default places band j at |xi| ~ 2^j.
inline constexpr double kDefaultCurveletUnit = 1.0 / (8 * kPi);
Frame build_curvelet_frame(double alpha, int J, int n, double unit = kDefaultCurveletUnit);
// c in (0,1] oversamples translations relative to the sparsest alias-free lattice.
Frame build_shearlet_frame(double beta, double c, int J, int n);
// tau in (0,1] plays the same role for the wavelet lattice.
Frame build_wavelet_frame(double sigma, double tau, int J, int n);

// Frame bounds estimated from random unit-norm band-limited images.
FrameBounds estimate_frame_bounds(const Frame& frame, int trials, std::uint64_t seed);
// Generic form: energy(f) is the analysis energy of a unit-norm sample.
FrameBounds estimate_bounds(const std::function<double(const Image&)>& energy,
                            const std::function<Image(std::uint64_t)>& sample, int trials,
                            std::uint64_t seed);

}  // namespace amol
