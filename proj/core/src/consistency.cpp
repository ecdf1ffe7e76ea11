#include "amol/consistency.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace amol {

namespace {

// Index with the powers of its scale that the distance needs.
struct Pt {
  int j = 0;
  double s, th, x, y, ex, ey;
  double pa;  // s^(2 alpha)
  double pb;  // s^(2(1-alpha))
  double s2;
};

Pt make_pt(const ParamPoint& p, int j, double alpha) {
  if (!(p.scale > 0)) throw std::invalid_argument("scales must be positive");
  return {j,
          p.scale,
          p.angle,
          p.location.x,
          p.location.y,
          std::cos(p.angle),
          -std::sin(p.angle),
          std::pow(p.scale, 2 * alpha),
          std::pow(p.scale, 2 * (1 - alpha)),
          p.scale * p.scale};
}

// 1 + d(lam, mu), minimized over periodic images; matches index_distance_d_periodic.
inline double one_plus_d(const Pt& lam, const Pt& mu, double P) {
  const Pt& lo = lam.s <= mu.s ? lam : mu;
  double dth = std::fmod(std::abs(lam.th - mu.th), kPi);
  dth = std::min(dth, kPi - dth);
  const double a = lo.pb * dth * dth;
  double dx = lam.x - mu.x, dy = lam.y - mu.y;
  dx -= P * std::round(dx / P);
  dy -= P * std::round(dy / P);
  double best = std::numeric_limits<double>::infinity();
  for (int u = -1; u <= 1; ++u)
    for (int v = -1; v <= 1; ++v) {
      const double X = dx + u * P, Y = dy + v * P;
      const double along = lam.ex * X + lam.ey * Y;
      best = std::min(best, lo.pa * (X * X + Y * Y) + lo.s2 * along * along / (1 + a));
    }
  return 1 + a + best;
}

inline double omega(const Pt& lam, const Pt& mu, double P) {
  return std::max(lam.s / mu.s, mu.s / lam.s) * one_plus_d(lam, mu, P);
}

void check_k(double alpha, double k) {
  if (!(alpha >= 0 && alpha <= 1)) throw std::invalid_argument("alpha must lie in [0,1]");
  if (!(k > 0)) throw std::invalid_argument("k must be positive");
}

std::vector<Pt> collect(const Parametrization& par, const Truncation& t, double alpha) {
  std::vector<Pt> out;
  enumerate_indices(par, t.max_scale, t.window,
                    [&](const Index& i, const ParamPoint& p) { out.push_back(make_pt(p, i.j, alpha)); });
  return out;
}

// Outer index set of a truncation: whole when small, otherwise every index
// of the coarsest scales plus evenly spaced indices of each finer scale.
std::vector<Pt> outer_set(const Parametrization& par, const Truncation& t, double alpha,
                          const ConsistencyOptions& opt, bool& exact) {
  std::map<int, std::int64_t> count;
  std::int64_t total = 0;
  enumerate_indices(par, t.max_scale, t.window, [&](const Index& i, const ParamPoint&) {
    ++count[i.j];
    ++total;
  });
  exact = total <= opt.exact_limit;
  std::vector<Pt> out;
  int rank = 0;
  for (const auto& [j, c] : count) {
    const bool all = exact || rank++ < opt.probe_scales;
    const std::int64_t m = all ? c : std::min<std::int64_t>(opt.probes_per_scale, c);
    std::int64_t seen = 0, next = 0, taken = 0;
    enumerate_scale(par, j, t.window, [&](const Index&, const ParamPoint& p) {
      if (taken < m && seen == next) {
        out.push_back(make_pt(p, j, alpha));
        ++taken;
        next = taken * c / m;
      }
      ++seen;
    });
  }
  return out;
}

// table[p][j - jmin]: sum over the inner indices of scale j of omega^-k,
// with the outer index as lambda when outer_is_lambda.
std::vector<std::vector<double>> scale_sums(const std::vector<Pt>& outer, const Parametrization& inner,
                                            int jmax, double window, double alpha, double k,
                                            bool outer_is_lambda) {
  const int jmin = min_scale_index(inner);
  std::vector<std::vector<double>> table(outer.size(), std::vector<double>(std::max(0, jmax - jmin + 1), 0.0));
  for (int j = jmin; j <= jmax; ++j) {
    enumerate_scale(inner, j, window, [&](const Index&, const ParamPoint& p) {
      const Pt q = make_pt(p, j, alpha);
      for (std::size_t o = 0; o < outer.size(); ++o) {
        const double w = outer_is_lambda ? omega(outer[o], q, window) : omega(q, outer[o], window);
        table[o][j - jmin] += std::exp(-k * std::log(w));
      }
    });
  }
  return table;
}

// Rungs sharing one window: sums are computed once up to the largest scale.
std::vector<ConsistencyRung> rungs_on_window(const Parametrization& A, const Parametrization& B,
                                             double alpha, double k, double window,
                                             const std::vector<int>& scales,
                                             const ConsistencyOptions& opt) {
  const int jmax = *std::max_element(scales.begin(), scales.end());
  const Truncation top{jmax, window};
  bool ea = true, eb = true;
  const auto oa = outer_set(A, top, alpha, opt, ea);
  const auto ob = outer_set(B, top, alpha, opt, eb);
  if (oa.empty() || ob.empty()) throw std::invalid_argument("consistency_sum: empty enumeration");
  const auto tab = scale_sums(oa, B, jmax, window, alpha, k, true);
  const auto tba = scale_sums(ob, A, jmax, window, alpha, k, false);
  const int ja = min_scale_index(A), jb = min_scale_index(B);

  std::vector<ConsistencyRung> out;
  for (int J : scales) {
    ConsistencyRung r;
    r.truncation = {J, window};
    std::int64_t na = 0, nb = 0;
    for (const auto& p : oa) na += p.j <= J;
    for (const auto& p : ob) nb += p.j <= J;
    if (na == 0 || nb == 0) throw std::invalid_argument("consistency_sum: empty enumeration");
    for (std::size_t o = 0; o < oa.size(); ++o) {
      if (oa[o].j > J) continue;
      double t = 0;
      for (int j = jb; j <= J; ++j) t += tab[o][j - jb];
      r.sup_ab = std::max(r.sup_ab, t);
    }
    for (std::size_t o = 0; o < ob.size(); ++o) {
      if (ob[o].j > J) continue;
      double t = 0;
      for (int j = ja; j <= J; ++j) t += tba[o][j - ja];
      r.sup_ba = std::max(r.sup_ba, t);
    }
    enumerate_indices(A, J, window, [&](const Index&, const ParamPoint&) { ++r.size_a; });
    enumerate_indices(B, J, window, [&](const Index&, const ParamPoint&) { ++r.size_b; });
    r.exact_sup = na == r.size_a && nb == r.size_b;
    out.push_back(r);
  }
  return out;
}

}  // namespace

SupSums sup_sums(const std::vector<ParamPoint>& A, const std::vector<ParamPoint>& B, double alpha,
                 double k, double period) {
  check_k(alpha, k);
  if (A.empty() || B.empty()) throw std::invalid_argument("sup_sums: empty index set");
  std::vector<Pt> a, b;
  for (const auto& p : A) a.push_back(make_pt(p, 0, alpha));
  for (const auto& p : B) b.push_back(make_pt(p, 0, alpha));
  SupSums s;
  for (const auto& l : a) {
    double t = 0;
    for (const auto& m : b) t += std::pow(omega(l, m, period), -k);
    s.ab = std::max(s.ab, t);
  }
  for (const auto& m : b) {
    double t = 0;
    for (const auto& l : a) t += std::pow(omega(l, m, period), -k);
    s.ba = std::max(s.ba, t);
  }
  return s;
}

ConsistencyRung consistency_sum(const Parametrization& A, const Parametrization& B, double alpha,
                                double k, const Truncation& truncation,
                                const ConsistencyOptions& opt) {
  check_k(alpha, k);
  if (!(truncation.window > 0) || !std::isfinite(truncation.window))
    throw std::invalid_argument("translation window must be positive and finite");
  return rungs_on_window(A, B, alpha, k, truncation.window, {truncation.max_scale}, opt).front();
}

ConsistencyReport consistency_ladder(const Parametrization& A, const Parametrization& B,
                                     double alpha, double k,
                                     const std::vector<Truncation>& ladder,
                                     const ConsistencyOptions& opt) {
  if (ladder.size() < 2) throw std::invalid_argument("a ladder needs at least two rungs");
  ConsistencyReport rep;
  rep.k = k;
  rep.alpha = alpha;
  check_k(alpha, k);
  std::vector<ConsistencyRung> computed;
  const bool shared = std::all_of(ladder.begin(), ladder.end(),
                                  [&](const Truncation& t) { return t.window == ladder[0].window; });
  if (shared) {
    if (!(ladder[0].window > 0) || !std::isfinite(ladder[0].window))
      throw std::invalid_argument("translation window must be positive and finite");
    std::vector<int> scales;
    for (const auto& t : ladder) scales.push_back(t.max_scale);
    computed = rungs_on_window(A, B, alpha, k, ladder[0].window, scales, opt);
  } else {
    for (const auto& t : ladder) computed.push_back(consistency_sum(A, B, alpha, k, t, opt));
  }
  std::vector<double> growth;
  for (auto r : computed) {
    if (!rep.rungs.empty()) {
      const auto& p = rep.rungs.back();
      r.increment = std::max((r.sup_ab - p.sup_ab) / p.sup_ab, (r.sup_ba - p.sup_ba) / p.sup_ba);
      growth.push_back(std::max(r.sup_ab - p.sup_ab, r.sup_ba - p.sup_ba));
    }
    rep.rungs.push_back(r);
  }
  rep.last_increment = rep.rungs.back().increment;
  const std::size_t g = growth.size();
  const bool growing = g >= 2 && growth[g - 1] > growth[g - 2] && (g < 3 || growth[g - 2] > growth[g - 3]);
  if (rep.last_increment < 0.01)
    rep.verdict = "consistent";
  else if (growing)
    rep.verdict = "divergent-suspect";
  else
    rep.verdict = "inconclusive";
  return rep;
}

ConsistencyReport saturation_ladder(const Parametrization& A, const Parametrization& B,
                                    double alpha, double k, int rungs, const Truncation& start,
                                    const ConsistencyOptions& opt) {
  if (rungs < 2) throw std::invalid_argument("saturation ladder needs rungs >= 2");
  std::vector<Truncation> ladder;
  for (int r = 0; r < rungs; ++r) ladder.push_back({start.max_scale + r, start.window});
  return consistency_ladder(A, B, alpha, k, ladder, opt);
}

ScaleSumFit per_scale_sums(const Parametrization& A, const Parametrization& B, double alpha,
                           double N, const Truncation& truncation) {
  check_k(alpha, N);
  const auto a = collect(A, truncation, alpha);
  const auto b = collect(B, truncation, alpha);
  if (a.empty() || b.empty()) throw std::invalid_argument("per_scale_sums: empty enumeration");
  const int jmin = min_scale_index(B);
  const double P = truncation.window;
  std::map<int, double> per;  // scale index of A -> sup over mu of the sum
  for (const auto& m : b) {
    if (m.j != jmin) continue;
    std::map<int, double> acc;
    for (const auto& l : a) {
      if (l.s <= m.s) continue;
      acc[l.j] += std::pow(one_plus_d(l, m, P), -N);
    }
    for (const auto& [j, v] : acc) per[j] = std::max(per[j], v);
  }
  ScaleSumFit fit;
  std::map<int, double> scale_of;
  for (const auto& l : a) scale_of[l.j] = l.s;
  double smu = 0;
  for (const auto& m : b)
    if (m.j == jmin) smu = m.s;
  for (const auto& [j, v] : per) {
    fit.ratio.push_back(scale_of[j] / smu);
    fit.sum.push_back(v);
  }
  if (fit.ratio.size() >= 2) {
    double sx = 0, sy = 0;
    const double m = static_cast<double>(fit.ratio.size());
    for (std::size_t i = 0; i < fit.ratio.size(); ++i) {
      sx += std::log(fit.ratio[i]);
      sy += std::log(fit.sum[i]);
    }
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < fit.ratio.size(); ++i) {
      const double x = std::log(fit.ratio[i]) - sx / m;
      sxx += x * x;
      sxy += x * (std::log(fit.sum[i]) - sy / m);
    }
    fit.slope = sxx > 0 ? sxy / sxx : 0.0;
    fit.intercept = sy / m - fit.slope * sx / m;
  }
  return fit;
}

}  // namespace amol
