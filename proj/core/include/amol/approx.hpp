#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amol/frame.hpp"

namespace amol {

// Indices sorted by decreasing magnitude; ties keep enumeration order.
std::vector<std::int64_t> magnitude_order(const CoefficientSet& c);

struct NtermResult {
  Image approx;
  double error2 = 0.0;
  std::int64_t kept = 0;
  bool clamped = false;  // N exceeded the coefficient count
};

NtermResult nterm(const Frame& frame, const CoefficientSet& coeffs, const Image& f, std::int64_t N);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // rms of log residuals
};

// Least squares of log(y) against log(x); nonpositive y are skipped.
LineFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

struct NtermCurve {
  std::string frame_id;
  std::vector<std::int64_t> ladder;
  std::vector<double> error2;
  double norm2 = 0.0;  // ||f||^2
  LineFit fit;         // over interior rungs
};

NtermCurve error_curve(const Frame& frame, const Image& f, const std::vector<std::int64_t>& ladder);
std::vector<std::int64_t> dyadic_ladder(int lo_exp, int hi_exp);

struct WeakLpDiagnostic {
  double p = 1.0;
  std::vector<std::int64_t> n;
  std::vector<double> value;  // n^{1/p} |c*_n|
  double max = 0.0;
  std::int64_t argmax = 0;    // position (1-based rank) of the maximum
};

WeakLpDiagnostic weak_lp(std::vector<double> magnitudes, double p);
WeakLpDiagnostic weak_lp(const CoefficientSet& c, double p);

double lp_norm(const std::vector<cplx>& v, double p);

struct TransferCertificate {
  double p = 1.0;
  double gramian_bound = 0.0;
  double target_norm = 0.0;   // ||c||_p of the second system
  double source_norm = 0.0;   // ||theta||_p of the first system
  double slack = 0.0;         // bound * source / target
  bool holds = false;
};

TransferCertificate transfer_certificate(const CoefficientSet& source, const CoefficientSet& target,
                                         double gramian_bound, double p);

}  // namespace amol
