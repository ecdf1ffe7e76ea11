#pragma once

#include <cstdint>
#include <vector>

#include "amol/frame.hpp"

namespace amol {

// <m_lambda, p_mu> summed over the common frequency support.
cplx cross_inner_product(const Frame& A, std::int64_t lambda, const Frame& B, std::int64_t mu);

// All <m_lambda, p_mu> for mu in B, in B's flat order.
std::vector<cplx> gramian_row(const Frame& A, std::int64_t lambda, const Frame& B);

struct GramianSample {
  std::int64_t a = 0;  // flat index in A (the "lambda" side of omega)
  std::int64_t b = 0;  // flat index in B
  int jA = 0, jB = 0;
  double omega = 1.0;
  double magnitude = 0.0;
  double angle_gap = 0.0;
  double offset = 0.0;  // torus distance of the two locations
};

struct SamplerOptions {
  int max_scale_gap = 3;
  double min_offset = 1e-3;
  double max_offset = 0.5;
};

// Pairs cycle through scale gaps 0..max_scale_gap; the second band is drawn
// uniformly among bands at that gap, and the partner location is the lattice
// point nearest to an offset from the first drawn from four strata in turn.
std::vector<GramianSample> sample_gramian(const Frame& A, const Frame& B, int count,
                                          std::uint64_t seed, const SamplerOptions& opt = {});

struct DecayBin {
  int decade = 0;
  double log_omega = 0.0;      // log10 of omega at the bin maximum
  double log_magnitude = 0.0;  // log10 of the bin maximum
};

struct DecayReport {
  double N = 2.0;
  double slack = 0.3;
  double C = 0.0;          // max |<.,.>| omega^N
  double C_lower = 0.0;    // same over the lower half of the log-omega range
  double C_upper = 0.0;    // and over the upper half
  double slope = 0.0;      // upper-envelope slope in log-log
  double slope_stderr = 0.0;
  double omega_min = 1.0, omega_max = 1.0;
  std::vector<DecayBin> bins;
  int inversions = 0;      // increases between consecutive decade maxima
  bool pass = false;
};

DecayReport verify_decay(const std::vector<GramianSample>& samples, double N, double slack = 0.3);

struct MatrixEntry {
  std::int64_t row = 0;
  std::int64_t col = 0;
  double magnitude = 0.0;
};

// max{sup_row sum |a|^q, sup_col sum |a|^q}^(1/q), q = min(1, p).
double lp_crossnorm_bound(const std::vector<MatrixEntry>& entries, double p);

struct CrossnormOptions {
  int max_scale = 1 << 20;  // bands with j above this are left out on both sides
  int rows_per_band = 2;
};

struct CrossnormResult {
  double p = 1.0;
  double row_sup = 0.0;  // already raised to 1/q
  double col_sup = 0.0;
  double bound = 0.0;
  std::int64_t rows = 0, cols = 0;
};

// Full rows and columns of the cross Gramian for a fixed set of elements
// per band (evenly spaced translates).
CrossnormResult sampled_crossnorm_bound(const Frame& A, const Frame& B, double p,
                                        const CrossnormOptions& opt = {});

}  // namespace amol
