#include "amol/serialize.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "amol/io.hpp"

namespace amol {

namespace {

// JSON has no infinities; they travel as strings.
Json num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

Json order_entry(int v) { return v == kInfiniteOrder ? Json("inf") : Json(v); }

template <class T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(std::string("field '") + key + "' has the wrong type");
  }
}

Json trig_terms(const std::vector<TrigTerm>& v) {
  Json a = Json::array();
  for (const auto& t : v) a.push_back({{"amp", t.amp}, {"p", t.p}, {"q", t.q}, {"phase", t.phase}});
  return a;
}

std::vector<TrigTerm> trig_terms_from(const Json& a) {
  std::vector<TrigTerm> out;
  for (const auto& t : a)
    out.push_back({field<double>(t, "amp"), field<int>(t, "p"), field<int>(t, "q"), field<double>(t, "phase")});
  return out;
}

}  // namespace

Json to_json(const Parametrization& p) {
  Json j;
  j["kind"] = p.kind();
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, CurveletParametrization>) {
          j["alpha"] = f.alpha;
          j["sigma"] = f.sigma;
          j["tau"] = f.tau;
          j["angle_rule"] = {{"kind", f.angle_rule.kind == AngleRule::Kind::Dyadic ? "dyadic" : "proportional"},
                             {"omega0", f.angle_rule.omega0}};
        } else if constexpr (std::is_same_v<T, ShearletParametrization>) {
          j["alpha"] = f.alpha;
          j["sigma"] = f.sigma;
          j["tau"] = f.tau;
          j["shear_rule"] = {{"eta0", f.shear_rule.eta0}, {"range0", f.shear_rule.range0}};
        } else {
          j["alpha"] = 1.0;
          j["sigma"] = f.sigma;
          j["tau"] = f.tau;
        }
      },
      p.family);
  j["truncation"] = {{"max_scale", p.truncation.max_scale}, {"window", p.truncation.window}};
  return j;
}

Parametrization parametrization_from_json(const Json& j) {
  const auto kind = field<std::string>(j, "kind");
  const double sigma = j.value("sigma", 2.0), tau = j.value("tau", 1.0);
  Parametrization p;
  if (kind == "curvelet") {
    p = make_curvelet_parametrization(field<double>(j, "alpha"), sigma, tau);
    if (j.contains("angle_rule")) {
      auto& f = std::get<CurveletParametrization>(p.family);
      const auto& r = j["angle_rule"];
      const auto rk = r.value("kind", std::string("dyadic"));
      if (rk != "dyadic" && rk != "proportional") throw std::invalid_argument("unknown angle rule '" + rk + "'");
      f.angle_rule.kind = rk == "dyadic" ? AngleRule::Kind::Dyadic : AngleRule::Kind::Proportional;
      f.angle_rule.omega0 = r.value("omega0", kPi);
    }
  } else if (kind == "shearlet") {
    p = make_shearlet_parametrization(field<double>(j, "alpha"), sigma, tau);
    if (j.contains("shear_rule")) {
      auto& f = std::get<ShearletParametrization>(p.family);
      f.shear_rule.eta0 = j["shear_rule"].value("eta0", 1.0);
      f.shear_rule.range0 = j["shear_rule"].value("range0", 1.0);
    }
  } else if (kind == "wavelet") {
    p = make_wavelet_parametrization(sigma, tau);
  } else {
    throw std::invalid_argument("unknown parametrization kind '" + kind + "'");
  }
  if (j.contains("truncation")) {
    p.truncation.max_scale = field<int>(j["truncation"], "max_scale");
    p.truncation.window = field<double>(j["truncation"], "window");
  }
  return p;
}

Json to_json(const CartoonSpec& s) {
  return {{"beta", s.beta},
          {"f0", trig_terms(s.f0)},
          {"f1", trig_terms(s.f1)},
          {"center", {s.center.x, s.center.y}},
          {"r0", s.r0},
          {"amps", s.amps},
          {"phases", s.phases},
          {"envelope", s.envelope},
          {"envelope_eps", s.envelope_eps},
          {"seed", s.seed}};
}

CartoonSpec cartoon_from_json(const Json& j) {
  CartoonSpec s;
  s.beta = field<double>(j, "beta");
  s.f0 = trig_terms_from(j.value("f0", Json::array()));
  s.f1 = trig_terms_from(j.value("f1", Json::array()));
  const auto c = field<std::vector<double>>(j, "center");
  if (c.size() != 2) throw std::invalid_argument("center needs two coordinates");
  s.center = {c[0], c[1]};
  s.r0 = field<double>(j, "r0");
  s.amps = j.value("amps", std::vector<double>{});
  s.phases = j.value("phases", std::vector<double>{});
  if (s.amps.size() != s.phases.size()) throw std::invalid_argument("amps and phases differ in length");
  s.envelope = j.value("envelope", s.envelope);
  s.envelope_eps = j.value("envelope_eps", s.envelope_eps);
  s.seed = j.value("seed", std::uint64_t{0});
  return s;
}

Json to_json(const MoleculeOrder& o) {
  return {{"L", order_entry(o.L)}, {"M", order_entry(o.M)}, {"N1", order_entry(o.N1)}, {"N2", order_entry(o.N2)}};
}

Json to_json(const OrderCertificate& c) {
  Json scales = Json::array();
  for (const auto& s : c.scales) {
    Json per = Json::array();
    for (double v : s.per_derivative) per.push_back(num(v));
    scales.push_back({{"j", s.j}, {"constant", num(s.constant)}, {"per_derivative", per}});
  }
  Json ders = Json::array();
  for (const auto& d : c.derivatives) ders.push_back({d[0], d[1]});
  return {{"order", to_json(c.order)}, {"alpha", c.alpha},   {"derivatives", ders},
          {"scales", scales},          {"ratio", num(c.ratio)}, {"saturated", c.saturated},
          {"pass", c.pass}};
}

Json to_json(const DecayReport& r) {
  Json bins = Json::array();
  for (const auto& b : r.bins)
    bins.push_back({{"decade", b.decade}, {"log_omega", b.log_omega}, {"log_magnitude", b.log_magnitude}});
  return {{"N", r.N},
          {"slack", r.slack},
          {"C", num(r.C)},
          {"C_lower", num(r.C_lower)},
          {"C_upper", num(r.C_upper)},
          {"slope", r.slope},
          {"slope_stderr", r.slope_stderr},
          {"omega_min", r.omega_min},
          {"omega_max", r.omega_max},
          {"decades", std::log10(r.omega_max / r.omega_min)},
          {"bins", bins},
          {"inversions", r.inversions},
          {"pass", r.pass}};
}

Json to_json(const ConsistencyReport& r) {
  Json rungs = Json::array();
  for (const auto& g : r.rungs)
    rungs.push_back({{"max_scale", g.truncation.max_scale},
                     {"window", g.truncation.window},
                     {"sup_ab", num(g.sup_ab)},
                     {"sup_ba", num(g.sup_ba)},
                     {"increment", num(g.increment)},
                     {"exact_sup", g.exact_sup},
                     {"size_a", g.size_a},
                     {"size_b", g.size_b}});
  return {{"k", r.k}, {"alpha", r.alpha}, {"rungs", rungs}, {"last_increment", num(r.last_increment)},
          {"verdict", r.verdict}};
}

Json to_json(const ScaleSumFit& f) {
  return {{"ratio", f.ratio}, {"sum", f.sum}, {"slope", f.slope}, {"intercept", f.intercept}};
}

Json to_json(const NtermCurve& c) {
  return {{"frame", c.frame_id},
          {"N", c.ladder},
          {"error2", c.error2},
          {"norm2", c.norm2},
          {"exponent", c.fit.slope},
          {"intercept", c.fit.intercept},
          {"residual", c.fit.residual}};
}

Json to_json(const TransferCertificate& t) {
  return {{"p", t.p},
          {"gramian_bound", num(t.gramian_bound)},
          {"target_norm", num(t.target_norm)},
          {"source_norm", num(t.source_norm)},
          {"slack", num(t.slack)},
          {"holds", t.holds}};
}

Json to_json(const CrossnormResult& r) {
  return {{"p", r.p}, {"row_sup", num(r.row_sup)}, {"col_sup", num(r.col_sup)},
          {"bound", num(r.bound)}, {"rows", r.rows}, {"cols", r.cols}};
}

Json frame_summary(const Frame& f) {
  std::map<int, std::pair<int, std::int64_t>> per;  // j -> (bands, elements)
  Json bands = Json::array();
  for (const auto& b : f.bands) {
    auto& e = per[b.j];
    ++e.first;
    e.second += b.count();
    bands.push_back({{"eps", b.eps},
                     {"j", b.j},
                     {"l", b.l},
                     {"scale", b.scale},
                     {"angle", b.angle},
                     {"translates", b.count()},
                     {"lattice", {b.lattice.d1(), b.lattice.d2()}},
                     {"box", {b.box[0], b.box[1], b.box[2], b.box[3]}}});
  }
  Json scales = Json::array();
  for (const auto& [j, e] : per) scales.push_back({{"j", j}, {"bands", e.first}, {"elements", e.second}});
  const auto fb = f.symbol_bounds();
  return {{"id", f.id},
          {"family", family_name(f.family)},
          {"alpha", f.alpha},
          {"n", f.n},
          {"J", f.J},
          {"elements", f.size()},
          {"covered_radius", f.covered_radius},
          {"symbol_bounds", {fb.lower, fb.upper}},
          {"scales", scales},
          {"bands", bands}};
}

std::string samples_csv(const std::vector<GramianSample>& s) {
  std::string out = "omega,magnitude,jA,jB,angle_gap,offset\n";
  for (const auto& x : s)
    out += format_double(x.omega) + ',' + format_double(x.magnitude) + ',' + std::to_string(x.jA) + ',' +
           std::to_string(x.jB) + ',' + format_double(x.angle_gap) + ',' + format_double(x.offset) + '\n';
  return out;
}

std::string ladder_csv(const ConsistencyReport& r) {
  std::string out = "rung,supAB,supBA,increment\n";
  for (std::size_t i = 0; i < r.rungs.size(); ++i)
    out += std::to_string(i) + ',' + format_double(r.rungs[i].sup_ab) + ',' + format_double(r.rungs[i].sup_ba) +
           ',' + format_double(r.rungs[i].increment) + '\n';
  return out;
}

std::string curve_csv(const NtermCurve& c) {
  std::string out = "N,error2,frame,exponent,intercept\n";
  for (std::size_t i = 0; i < c.ladder.size(); ++i)
    out += std::to_string(c.ladder[i]) + ',' + format_double(c.error2[i]) + ',' + c.frame_id + ',' +
           format_double(c.fit.slope) + ',' + format_double(c.fit.intercept) + '\n';
  return out;
}

std::string weak_lp_csv(const WeakLpDiagnostic& d) {
  std::string out = "n,value\n";
  for (std::size_t i = 0; i < d.n.size(); ++i) out += std::to_string(d.n[i]) + ',' + format_double(d.value[i]) + '\n';
  return out;
}

}  // namespace amol
