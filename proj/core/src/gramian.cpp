#include "amol/gramian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

namespace amol {

namespace {

double wrap(double d) { return d - std::round(d); }

ParamPoint point_of_band(const Band& b, Vec2 x) { return {b.scale, b.angle, x}; }

int scale_gap(const Band& a, const Band& b) {
  return static_cast<int>(std::lround(std::abs(std::log2(b.scale / a.scale))));
}

}  // namespace

cplx cross_inner_product(const Frame& A, std::int64_t lambda, const Frame& B, std::int64_t mu) {
  if (A.n != B.n) throw std::invalid_argument("cross_inner_product: frames live on different grids");
  const Band& ba = A.bands[A.band_of(lambda)];
  const Band& bb = B.bands[B.band_of(mu)];
  if (ba.box[0] > bb.box[1] || bb.box[0] > ba.box[1] || ba.box[2] > bb.box[3] || bb.box[2] > ba.box[3])
    return {};
  const Vec2 xa = A.location_of(lambda), xb = B.location_of(mu);
  const double dx1 = wrap(xa.x - xb.x), dx2 = wrap(xa.y - xb.y);
  const int n = A.n;
  cplx sum{};
  auto ia = ba.entries.begin(), ib = bb.entries.begin();
  while (ia != ba.entries.end() && ib != bb.entries.end()) {
    if (ia->grid < ib->grid) {
      ++ia;
    } else if (ib->grid < ia->grid) {
      ++ib;
    } else {
      const int xi1 = centered(ia->grid / n, n), xi2 = centered(ia->grid % n, n);
      const double ph = -2 * kPi * (xi1 * dx1 + xi2 * dx2);
      sum += (ia->w * ib->w) * cplx(std::cos(ph), std::sin(ph));
      ++ia;
      ++ib;
    }
  }
  return sum * (ba.norm * bb.norm);
}

std::vector<cplx> gramian_row(const Frame& A, std::int64_t lambda, const Frame& B) {
  if (A.n != B.n) throw std::invalid_argument("gramian_row: frames live on different grids");
  return B.analyze(A.element_spectrum(lambda)).values;
}

std::vector<GramianSample> sample_gramian(const Frame& A, const Frame& B, int count,
                                          std::uint64_t seed, const SamplerOptions& opt) {
  if (count < 0) throw std::invalid_argument("sample count must be nonnegative");
  if (A.n != B.n) throw std::invalid_argument("sample_gramian: frames live on different grids");
  std::vector<GramianSample> out;
  if (count == 0) return out;
  if (!(opt.min_offset > 0 && opt.max_offset >= opt.min_offset))
    throw std::invalid_argument("offset range must satisfy 0 < min <= max");

  // partner bands of every band of A, by scale gap
  const int G = opt.max_scale_gap;
  std::vector<std::vector<std::vector<int>>> partners(A.bands.size(), std::vector<std::vector<int>>(G + 1));
  for (std::size_t a = 0; a < A.bands.size(); ++a)
    for (std::size_t b = 0; b < B.bands.size(); ++b) {
      const int g = scale_gap(A.bands[a], B.bands[b]);
      if (g <= G) partners[a][g].push_back(static_cast<int>(b));
    }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double lmin = std::log(opt.min_offset), lmax = std::log(opt.max_offset);
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int gap = i % (G + 1);
    int a = -1;
    for (int tries = 0; tries < 64 && a < 0; ++tries) {
      const int cand = static_cast<int>(rng() % A.bands.size());
      if (!partners[cand][gap].empty()) a = cand;
    }
    if (a < 0) {  // no band pair at this gap: fall back to equal scales
      a = static_cast<int>(rng() % A.bands.size());
      if (partners[a][0].empty()) throw std::runtime_error("sample_gramian: frames share no scales");
    }
    const auto& cands = partners[a][partners[a][gap].empty() ? 0 : gap];
    const int b = cands[rng() % cands.size()];
    const Band& ba = A.bands[a];
    const Band& bb = B.bands[b];
    const std::int64_t local = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(ba.count()));
    const std::int64_t lam = ba.offset + local;
    const Vec2 xa = A.location_of(lam);
    // offset strata: colocated, log-uniform in a random direction, log-uniform
    // across the ridge (along e_lambda), and far across the ridge
    const int stratum = (i / (G + 1)) % 4;
    double r = 0.0, dir = 2 * kPi * unit(rng);
    if (stratum == 1 || stratum == 2) r = std::exp(lmin + (lmax - lmin) * unit(rng));
    if (stratum == 3) r = opt.max_offset * (0.5 + 0.5 * unit(rng));
    if (stratum >= 2) dir = -ba.angle + (unit(rng) < 0.5 ? 0.0 : kPi);
    Vec2 target{xa.x + r * std::cos(dir), xa.y + r * std::sin(dir)};
    target.x -= std::floor(target.x);
    target.y -= std::floor(target.y);
    const auto k = bb.lattice.nearest(target);
    const std::int64_t mu = bb.offset + k[0] * bb.lattice.d2() + k[1];
    const Vec2 xb = B.location_of(mu);

    GramianSample s;
    s.a = lam;
    s.b = mu;
    s.jA = ba.j;
    s.jB = bb.j;
    s.omega = omega_distance_periodic(A.alpha, point_of_band(ba, xa), point_of_band(bb, xb), 1.0);
    s.magnitude = std::abs(cross_inner_product(A, lam, B, mu));
    s.angle_gap = angle_diff(ba.angle, bb.angle);
    s.offset = std::hypot(wrap(xa.x - xb.x), wrap(xa.y - xb.y));
    out.push_back(s);
  }
  return out;
}

DecayReport verify_decay(const std::vector<GramianSample>& samples, double N, double slack) {
  if (samples.empty()) throw std::invalid_argument("verify_decay: no samples");
  if (!(N > 0)) throw std::invalid_argument("verify_decay: N must be positive");
  DecayReport rep;
  rep.N = N;
  rep.slack = slack;
  rep.omega_min = std::numeric_limits<double>::infinity();
  rep.omega_max = 0;
  for (const auto& s : samples) {
    if (s.omega < 1.0 - 1e-12) throw std::invalid_argument("verify_decay: omega below one");
    rep.omega_min = std::min(rep.omega_min, s.omega);
    rep.omega_max = std::max(rep.omega_max, s.omega);
  }
  const double mid = std::sqrt(rep.omega_min * rep.omega_max);
  std::map<int, std::pair<double, double>> best;  // decade -> (magnitude, omega)
  for (const auto& s : samples) {
    const double c = s.magnitude * std::pow(s.omega, N);
    rep.C = std::max(rep.C, c);
    (s.omega <= mid ? rep.C_lower : rep.C_upper) = std::max(s.omega <= mid ? rep.C_lower : rep.C_upper, c);
    if (s.magnitude <= 0) continue;
    const int dec = static_cast<int>(std::floor(std::log10(s.omega)));
    auto it = best.find(dec);
    if (it == best.end() || s.magnitude > it->second.first) best[dec] = {s.magnitude, s.omega};
  }
  for (const auto& [dec, mo] : best) rep.bins.push_back({dec, std::log10(mo.second), std::log10(mo.first)});
  for (std::size_t i = 1; i < rep.bins.size(); ++i)
    if (rep.bins[i].log_magnitude > rep.bins[i - 1].log_magnitude) ++rep.inversions;

  bool slope_ok = true;
  if (rep.bins.size() >= 2) {
    const double m = static_cast<double>(rep.bins.size());
    double sx = 0, sy = 0;
    for (const auto& b : rep.bins) {
      sx += b.log_omega;
      sy += b.log_magnitude;
    }
    const double mx = sx / m, my = sy / m;
    double sxx = 0, sxy = 0;
    for (const auto& b : rep.bins) {
      sxx += (b.log_omega - mx) * (b.log_omega - mx);
      sxy += (b.log_omega - mx) * (b.log_magnitude - my);
    }
    rep.slope = sxx > 0 ? sxy / sxx : 0.0;
    if (rep.bins.size() > 2 && sxx > 0) {
      double rss = 0;
      for (const auto& b : rep.bins) {
        const double r = b.log_magnitude - (my + rep.slope * (b.log_omega - mx));
        rss += r * r;
      }
      rep.slope_stderr = std::sqrt(rss / (m - 2) / sxx);
    }
    slope_ok = rep.slope <= -N + slack;
  }
  // one-sided: the constant must not grow toward large omega
  const bool stable = rep.C_upper <= 2.0 * rep.C_lower || (rep.C_lower == 0 && rep.C_upper == 0);
  rep.pass = rep.C == 0 || (slope_ok && stable);
  return rep;
}

double lp_crossnorm_bound(const std::vector<MatrixEntry>& entries, double p) {
  if (!(p > 0)) throw std::invalid_argument("p must be positive");
  const double q = std::min(1.0, p);
  std::map<std::int64_t, double> rows, cols;
  for (const auto& e : entries) {
    const double v = std::pow(std::abs(e.magnitude), q);
    rows[e.row] += v;
    cols[e.col] += v;
  }
  double sup = 0;
  for (const auto& [k, v] : rows) sup = std::max(sup, v);
  for (const auto& [k, v] : cols) sup = std::max(sup, v);
  return std::pow(sup, 1.0 / q);
}

namespace {

// q-sums of sampled rows of <A_lambda, B_mu> over B's bands up to max_scale.
double sampled_rows(const Frame& A, const Frame& B, double q, const CrossnormOptions& opt,
                    std::int64_t& count) {
  double sup = 0;
  for (const auto& ba : A.bands) {
    if (ba.j > opt.max_scale) continue;
    const int per = static_cast<int>(std::min<std::int64_t>(opt.rows_per_band, ba.count()));
    for (int r = 0; r < per; ++r) {
      const std::int64_t lam = ba.offset + r * ba.count() / per;
      const auto row = gramian_row(A, lam, B);
      double s = 0;
      for (const auto& bb : B.bands) {
        if (bb.j > opt.max_scale) continue;
        for (std::int64_t k = 0; k < bb.count(); ++k) s += std::pow(std::abs(row[bb.offset + k]), q);
      }
      sup = std::max(sup, s);
      ++count;
    }
  }
  return sup;
}

}  // namespace

CrossnormResult sampled_crossnorm_bound(const Frame& A, const Frame& B, double p,
                                        const CrossnormOptions& opt) {
  if (!(p > 0)) throw std::invalid_argument("p must be positive");
  if (opt.rows_per_band < 1) throw std::invalid_argument("rows_per_band must be >= 1");
  if (A.n != B.n) throw std::invalid_argument("crossnorm: frames live on different grids");
  const double q = std::min(1.0, p);
  CrossnormResult res;
  res.p = p;
  // |<p_mu, m_lambda>| = |<m_lambda, p_mu>|, so columns are rows of the swapped pair
  res.row_sup = std::pow(sampled_rows(A, B, q, opt, res.rows), 1.0 / q);
  res.col_sup = std::pow(sampled_rows(B, A, q, opt, res.cols), 1.0 / q);
  res.bound = std::max(res.row_sup, res.col_sup);
  return res;
}

}  // namespace amol
