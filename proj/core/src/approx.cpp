#include "amol/approx.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <stdexcept>

namespace amol {

std::vector<std::int64_t> magnitude_order(const CoefficientSet& c) {
  std::vector<double> mag(c.values.size());
  for (std::size_t i = 0; i < mag.size(); ++i) mag[i] = std::abs(c.values[i]);
  std::vector<std::int64_t> idx(mag.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::int64_t a, std::int64_t b) { return mag[a] > mag[b]; });
  return idx;
}

namespace {

double spectral_error(const Spectrum& a, const Spectrum& b) {
  long double s = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) s += std::norm(a.data[i] - b.data[i]);
  return static_cast<double>(s);
}

}  // namespace

NtermResult nterm(const Frame& frame, const CoefficientSet& coeffs, const Image& f, std::int64_t N) {
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
  NtermResult r;
  const auto total = static_cast<std::int64_t>(coeffs.values.size());
  if (N > total) {
    std::cerr << "warning: N=" << N << " exceeds the " << total << " available coefficients\n";
    N = total;
    r.clamped = true;
  }
  const auto order = magnitude_order(coeffs);
  CoefficientSet kept{coeffs.frame_id, coeffs.n, std::vector<cplx>(coeffs.values.size())};
  for (std::int64_t i = 0; i < N; ++i) kept.values[order[i]] = coeffs.values[order[i]];
  const Spectrum g = frame.reconstruct_spectrum(kept);
  r.error2 = spectral_error(forward_fft(f), g);
  r.approx = inverse_fft(g);
  r.kept = N;
  return r;
}

LineFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
    if (x[i] > 0 && y[i] > 0) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  LineFit fit;
  if (lx.size() < 2) return fit;
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / lx.size();
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / ly.size();
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  fit.slope = sxx > 0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  double rss = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double e = ly[i] - (fit.intercept + fit.slope * lx[i]);
    rss += e * e;
  }
  fit.residual = std::sqrt(rss / lx.size());
  return fit;
}

std::vector<std::int64_t> dyadic_ladder(int lo_exp, int hi_exp) {
  std::vector<std::int64_t> v;
  for (int e = lo_exp; e <= hi_exp; ++e) v.push_back(std::int64_t{1} << e);
  return v;
}

NtermCurve error_curve(const Frame& frame, const Image& f, const std::vector<std::int64_t>& ladder) {
  if (ladder.size() < 4) throw std::invalid_argument("ladder needs at least 4 rungs for a fit");
  if (!std::is_sorted(ladder.begin(), ladder.end())) throw std::invalid_argument("ladder must be ascending");
  const Spectrum fhat = forward_fft(f);
  const CoefficientSet c = frame.analyze(fhat);
  const auto order = magnitude_order(c);
  const auto total = static_cast<std::int64_t>(order.size());

  NtermCurve curve;
  curve.frame_id = frame.id;
  curve.ladder = ladder;
  curve.norm2 = spectral_error(fhat, Spectrum(f.n));
  CoefficientSet kept{c.frame_id, c.n, std::vector<cplx>(c.values.size())};
  std::int64_t filled = 0;
  for (auto N : ladder) {
    N = std::min(std::max<std::int64_t>(N, 0), total);
    for (; filled < N; ++filled) kept.values[order[filled]] = c.values[order[filled]];
    curve.error2.push_back(spectral_error(fhat, frame.reconstruct_spectrum(kept)));
  }
  std::vector<double> x(ladder.begin() + 1, ladder.end() - 1), y(curve.error2.begin() + 1, curve.error2.end() - 1);
  curve.fit = fit_loglog(x, y);
  return curve;
}

WeakLpDiagnostic weak_lp(std::vector<double> mag, double p) {
  if (!(p > 0 && p <= 2)) throw std::invalid_argument("p must lie in (0,2]");
  std::sort(mag.begin(), mag.end(), std::greater<>());
  WeakLpDiagnostic d;
  d.p = p;
  for (std::int64_t k = 1; k <= static_cast<std::int64_t>(mag.size()); k *= 2) {
    const double v = std::pow(static_cast<double>(k), 1.0 / p) * mag[k - 1];
    d.n.push_back(k);
    d.value.push_back(v);
    if (v > d.max) {
      d.max = v;
      d.argmax = k;
    }
  }
  return d;
}

WeakLpDiagnostic weak_lp(const CoefficientSet& c, double p) {
  std::vector<double> mag(c.values.size());
  for (std::size_t i = 0; i < mag.size(); ++i) mag[i] = std::abs(c.values[i]);
  return weak_lp(std::move(mag), p);
}

double lp_norm(const std::vector<cplx>& v, double p) {
  if (!(p > 0)) throw std::invalid_argument("p must be positive");
  long double s = 0;
  for (const auto& x : v) s += std::pow(std::abs(x), p);
  return static_cast<double>(std::pow(s, 1.0L / p));
}

TransferCertificate transfer_certificate(const CoefficientSet& source, const CoefficientSet& target,
                                         double gramian_bound, double p) {
  TransferCertificate t;
  t.p = p;
  t.gramian_bound = gramian_bound;
  t.source_norm = lp_norm(source.values, p);
  t.target_norm = lp_norm(target.values, p);
  const double rhs = gramian_bound * t.source_norm;
  t.slack = t.target_norm > 0 ? rhs / t.target_norm : (rhs > 0 ? INFINITY : 1.0);
  t.holds = t.target_norm <= rhs * (1 + 1e-12);
  return t;
}

}  // namespace amol
