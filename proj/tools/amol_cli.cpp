#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "amol/approx.hpp"
#include "amol/cartoon.hpp"
#include "amol/consistency.hpp"
#include "amol/frame.hpp"
#include "amol/gramian.hpp"
#include "amol/io.hpp"
#include "amol/molecule.hpp"
#include "amol/serialize.hpp"

namespace fs = std::filesystem;
using amol::Json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sets a dotted path ("frame.alpha") in a JSON object.
void set_path(Json& root, const std::string& path, const Json& v) {
  Json* cur = &root;
  std::size_t start = 0;
  while (true) {
    const auto dot = path.find('.', start);
    const std::string key = path.substr(start, dot - start);
    if (dot == std::string::npos) {
      (*cur)[key] = v;
      return;
    }
    if (!cur->contains(key) || !(*cur)[key].is_object()) (*cur)[key] = Json::object();
    cur = &(*cur)[key];
    start = dot + 1;
  }
}

// Flag values are JSON literals when they parse as such, strings otherwise.
Json flag_value(const std::string& s) {
  try {
    return Json::parse(s);
  } catch (const nlohmann::json::exception&) {
    return s;
  }
}

template <class T>
T get(const Json& cfg, const std::string& key, const T& dflt) {
  if (!cfg.contains(key) || cfg[key].is_null()) return dflt;
  try {
    return cfg[key].get<T>();
  } catch (const nlohmann::json::exception&) {
    throw UsageError("config field '" + key + "' has the wrong type");
  }
}

std::string output_root() {
  const char* env = std::getenv("AMOL_OUTPUT_ROOT");
  return env && *env ? env : "amol-out";
}

// ---- frames ----

Json frame_config(const Json& f) {
  if (f.is_string()) return Json{{"family", f}};
  if (!f.is_object()) throw UsageError("frame must be a family name or an object");
  return f;
}

amol::Frame build_frame(const Json& fc, int n_default) {
  const Json f = frame_config(fc);
  const auto fam = get<std::string>(f, "family", "curvelet");
  const int n = get<int>(f, "n", n_default);
  amol::check_grid(n);
  if (fam == "curvelet") {
    const double alpha = get<double>(f, "alpha", 0.5);
    const double unit = get<double>(f, "unit", amol::kDefaultCurveletUnit);
    const int J = get<int>(f, "J", amol::max_curvelet_scale(n, unit));
    return amol::build_curvelet_frame(alpha, J, n, unit);
  }
  if (fam == "shearlet") {
    const double beta = get<double>(f, "beta", 2.0);
    const int J = get<int>(f, "J", amol::max_shearlet_scale(beta, n));
    return amol::build_shearlet_frame(beta, get<double>(f, "c", 1.0), J, n);
  }
  if (fam == "wavelet") {
    const double sigma = get<double>(f, "sigma", 2.0);
    const int J = get<int>(f, "J", amol::max_wavelet_scale(sigma, n));
    return amol::build_wavelet_frame(sigma, get<double>(f, "tau", 1.0), J, n);
  }
  throw UsageError("unknown frame family '" + fam + "' (curvelet, shearlet, wavelet)");
}

amol::Parametrization parametrization(const Json& p, double alpha) {
  if (p.is_string()) {
    const auto k = p.get<std::string>();
    if (k == "curvelet") return amol::make_curvelet_parametrization(alpha);
    if (k == "shearlet") return amol::make_shearlet_parametrization(alpha);
    if (k == "wavelet") return amol::make_wavelet_parametrization();
    throw UsageError("unknown parametrization '" + k + "'");
  }
  return amol::parametrization_from_json(p);
}

// ---- run bookkeeping ----

struct Run {
  std::string command;
  Json config;
  fs::path out;
  std::vector<std::string> artifacts;
  Json summary = Json::object();

  void write(const std::string& name, const std::string& content) {
    amol::write_file_atomic((out / name).string(), content);
    artifacts.push_back(name);
  }
  void write_json(const std::string& name, const Json& j) { write(name, j.dump(2) + "\n"); }
  void write_image(const std::string& name, const amol::Image& f) {
    amol::write_image((out / name).string(), f);
    artifacts.push_back(name);
    artifacts.push_back(name + ".json");
  }
};

// ---- commands ----

int cmd_build_frame(Run& r) {
  const auto frame = build_frame(r.config.value("frame", Json("curvelet")), get<int>(r.config, "n", 256));
  const Json s = amol::frame_summary(frame);
  r.write_json("frame.json", s);
  r.summary["elements"] = frame.size();
  r.summary["bands"] = frame.bands.size();
  r.summary["scales"] = s["scales"];
  return 0;
}

amol::CoefficientSet read_coefficients(const std::string& path, const amol::Frame& frame) {
  std::istringstream in(amol::read_file(path));
  std::string line;
  if (!std::getline(in, line) || line != "family,eps,j,l,k1,k2,re,im")
    throw std::runtime_error("bad coefficient header in " + path);
  amol::CoefficientSet c;
  c.frame_id = frame.id;
  c.n = frame.n;
  c.values.reserve(static_cast<std::size_t>(frame.size()));
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    if (f.size() != 8) throw std::runtime_error("bad coefficient row: " + line);
    const auto flat = static_cast<std::int64_t>(c.values.size());
    if (flat >= frame.size()) throw std::runtime_error("more coefficients than frame elements");
    const auto idx = frame.index_of(flat);
    if (f[0] != amol::family_name(frame.family) || std::stoi(f[1]) != idx.eps || std::stoi(f[2]) != idx.j ||
        std::stoi(f[3]) != idx.l || std::stoll(f[4]) != idx.k1 || std::stoll(f[5]) != idx.k2)
      throw std::runtime_error("coefficient row does not match the frame: " + line);
    c.values.emplace_back(std::stod(f[6]), std::stod(f[7]));
  }
  if (static_cast<std::int64_t>(c.values.size()) != frame.size())
    throw std::runtime_error("coefficient count does not match the frame");
  return c;
}

int cmd_transform(Run& r) {
  const auto input = get<std::string>(r.config, "input", "");
  if (input.empty()) throw UsageError("transform needs an input path");
  const auto dir = get<std::string>(r.config, "direction", "analyze");
  if (dir == "synthesize") {
    const auto frame = build_frame(r.config.value("frame", Json("curvelet")), get<int>(r.config, "n", 256));
    const auto c = read_coefficients(input, frame);
    r.write_image("image.f64", frame.reconstruct(c));
    return 0;
  }
  if (dir != "analyze" && dir != "roundtrip") throw UsageError("direction must be analyze, synthesize or roundtrip");
  const amol::Image f = amol::read_image(input);
  const auto frame = build_frame(r.config.value("frame", Json("curvelet")), get<int>(r.config, "n", f.n));
  if (frame.n != f.n)
    throw std::runtime_error("image grid " + std::to_string(f.n) + " does not match frame grid " +
                             std::to_string(frame.n));
  const auto c = frame.analyze(f);
  double energy = 0;
  for (const auto& v : c.values) energy += std::norm(v);
  r.summary["coefficients"] = c.values.size();
  r.summary["energy"] = energy;
  r.summary["image_norm2"] = amol::norm_sq(f);
  if (dir == "analyze") {
    r.write("coefficients.csv", amol::coefficients_csv(frame, c));
  } else {
    const auto back = frame.reconstruct(c);
    const double err = amol::relative_error(f, back);
    r.summary["roundtrip_error"] = err;
    r.write_image("roundtrip.f64", back);
    std::cout << "round-trip relative error " << amol::format_double(err) << "\n";
  }
  return 0;
}

int cmd_gramian(Run& r) {
  const int n = get<int>(r.config, "n", 256);
  const auto A = build_frame(r.config.value("frame_a", Json{{"family", "curvelet"}, {"alpha", 0.5}}), n);
  const auto B = build_frame(r.config.value("frame_b", Json{{"family", "shearlet"}, {"beta", 2.0}}), n);
  const int count = get<int>(r.config, "count", 10000);
  if (count <= 0) throw UsageError("sampler needs a positive pair count");
  amol::SamplerOptions so;
  so.max_scale_gap = get<int>(r.config, "max_scale_gap", so.max_scale_gap);
  const auto samples = amol::sample_gramian(A, B, count, get<std::uint64_t>(r.config, "seed", 1), so);
  const auto rep = amol::verify_decay(samples, get<double>(r.config, "N", 2.0), get<double>(r.config, "slack", 0.3));
  r.write("samples.csv", amol::samples_csv(samples));
  const Json j = amol::to_json(rep);
  r.write_json("decay.json", j);
  r.summary["slope"] = rep.slope;
  r.summary["decades"] = j["decades"];
  r.summary["pass"] = rep.pass;
  return rep.pass ? 0 : 2;
}

int cmd_consistency(Run& r) {
  const double alpha = get<double>(r.config, "alpha", 0.5);
  const auto A = parametrization(r.config.value("a", Json("curvelet")), alpha);
  const auto B = parametrization(r.config.value("b", Json("curvelet")), alpha);
  const int rungs = get<int>(r.config, "rungs", 6);
  if (rungs < 2) throw UsageError("consistency needs rungs >= 2");
  amol::ConsistencyOptions opt;
  opt.exact_limit = get<int>(r.config, "exact_limit", opt.exact_limit);
  opt.probe_scales = get<int>(r.config, "probe_scales", opt.probe_scales);
  opt.probes_per_scale = get<int>(r.config, "probes_per_scale", opt.probes_per_scale);
  const amol::Truncation start{get<int>(r.config, "start_scale", 3), get<double>(r.config, "window", 1.0)};
  const auto rep = amol::saturation_ladder(A, B, alpha, get<double>(r.config, "k", 2.5), rungs, start, opt);
  r.write("ladder.csv", amol::ladder_csv(rep));
  Json j = amol::to_json(rep);
  j["a"] = amol::to_json(A);
  j["b"] = amol::to_json(B);
  r.write_json("verdict.json", j);
  const auto expect = get<std::string>(r.config, "expect", "consistent");
  r.summary["verdict"] = rep.verdict;
  r.summary["last_increment"] = rep.last_increment;
  r.summary["expected"] = expect;
  return rep.verdict == expect ? 0 : 2;
}

amol::CartoonSpec cartoon_spec(const Json& cfg) {
  if (cfg.contains("spec")) {
    const auto& s = cfg["spec"];
    return s.is_string() ? amol::cartoon_from_json(Json::parse(amol::read_file(s.get<std::string>())))
                         : amol::cartoon_from_json(s);
  }
  if (cfg.contains("disc_radius")) return amol::disc_spec(get<double>(cfg, "disc_radius", 0.25));
  amol::CartoonOptions o;
  o.modes = get<int>(cfg, "modes", o.modes);
  return amol::random_cartoon_spec(get<double>(cfg, "beta", 2.0), get<std::uint64_t>(cfg, "seed", 1), o);
}

int cmd_cartoon(Run& r) {
  const auto spec = cartoon_spec(r.config);
  amol::validate(spec);
  const int n = get<int>(r.config, "n", 512);
  const auto img = amol::generate_cartoon(spec, n);
  r.write_image("cartoon.f64", img);
  r.write_json("spec.json", amol::to_json(spec));
  r.summary["mean"] = [&] {
    double s = 0;
    for (double v : img.data) s += v;
    return s / static_cast<double>(img.data.size());
  }();
  return 0;
}

int cmd_nterm(Run& r) {
  const int n = get<int>(r.config, "n", 512);
  amol::Image f;
  if (r.config.contains("input")) {
    f = amol::read_image(get<std::string>(r.config, "input", ""));
  } else {
    const auto spec = cartoon_spec(r.config.value("cartoon", Json::object()));
    amol::validate(spec);
    f = amol::generate_cartoon(spec, n);
  }
  const double cutoff = get<double>(r.config, "lowpass", 0.0);
  if (cutoff > 0) f = amol::smooth_lowpass(f, cutoff);
  const Json frames = r.config.value("frames", Json::array({"curvelet", "wavelet"}));
  if (!frames.is_array() || frames.empty()) throw UsageError("nterm needs a nonempty frames list");
  const auto ladder = amol::dyadic_ladder(get<int>(r.config, "lo_exp", 6), get<int>(r.config, "hi_exp", 14));
  Json exps = Json::object();
  Json curves = Json::array();
  for (const auto& fc : frames) {
    const auto frame = build_frame(fc, f.n);
    const auto curve = amol::error_curve(frame, f, ladder);
    r.write("curve_" + frame.id + ".csv", amol::curve_csv(curve));
    const auto wl = amol::weak_lp(frame.analyze(f), get<double>(r.config, "weak_p", 2.0 / 3.0));
    r.write("weaklp_" + frame.id + ".csv", amol::weak_lp_csv(wl));
    exps[frame.id] = curve.fit.slope;
    curves.push_back(amol::to_json(curve));
  }
  Json j{{"exponents", exps}, {"curves", curves}};
  r.write_json("nterm.json", j);
  r.summary["exponents"] = exps;
  return 0;
}

amol::MoleculeOrder order_from(const Json& o) {
  auto entry = [&](const char* k, int d) {
    if (!o.contains(k)) return d;
    if (o[k].is_string() && o[k] == "inf") return amol::kInfiniteOrder;
    return o[k].get<int>();
  };
  return {entry("L", amol::kInfiniteOrder), entry("M", amol::kInfiniteOrder), entry("N1", amol::kInfiniteOrder),
          entry("N2", amol::kInfiniteOrder)};
}

int cmd_molecule_check(Run& r) {
  const auto frame = build_frame(r.config.value("frame", Json("curvelet")), get<int>(r.config, "n", 256));
  amol::MoleculeCheckOptions opt;
  opt.box_points = get<int>(r.config, "box_points", opt.box_points);
  opt.box_radius = get<double>(r.config, "box_radius", opt.box_radius);
  opt.ratio_threshold = get<double>(r.config, "ratio_threshold", opt.ratio_threshold);
  const auto order = order_from(r.config.value("order", Json::object()));
  const auto bands = amol::default_band_sample(frame);
  const auto cert = amol::check_generator(frame, bands, order, get<int>(r.config, "levels", 2), opt);
  r.write_json("certificate.json", amol::to_json(cert));
  r.summary["ratio"] = cert.ratio;
  r.summary["pass"] = cert.pass;
  return cert.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Experiments on anisotropic multiscale frames"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  using Handler = int (*)(Run&);
  struct Verb {
    const char* name;
    const char* help;
    Handler run;
    std::vector<std::pair<std::string, std::string>> flags;  // flag, config path
  };
  const std::vector<Verb> verbs = {
      {"build-frame", "Summarize a frame (counts per scale, support boxes)", cmd_build_frame,
       {{"--family", "frame.family"}, {"--alpha", "frame.alpha"}, {"--beta", "frame.beta"},
        {"--J", "frame.J"}, {"--n", "frame.n"}}},
      {"transform", "Analyze, synthesize or round-trip an image", cmd_transform,
       {{"--input", "input"}, {"--direction", "direction"}, {"--family", "frame.family"},
        {"--alpha", "frame.alpha"}, {"--J", "frame.J"}}},
      {"gramian", "Sample the cross Gramian and check its decay", cmd_gramian,
       {{"--count", "count"}, {"--seed", "seed"}, {"--n", "n"}, {"--N", "N"}, {"--slack", "slack"}}},
      {"consistency", "Saturation ladder of the consistency sums", cmd_consistency,
       {{"--a", "a"}, {"--b", "b"}, {"--alpha", "alpha"}, {"--k", "k"}, {"--rungs", "rungs"},
        {"--start-scale", "start_scale"}, {"--window", "window"}, {"--expect", "expect"}}},
      {"cartoon", "Generate a cartoon image", cmd_cartoon,
       {{"--beta", "beta"}, {"--seed", "seed"}, {"--n", "n"}, {"--disc-radius", "disc_radius"},
        {"--spec", "spec"}}},
      {"nterm", "N-term approximation curves and rate fits", cmd_nterm,
       {{"--frames", "frames"}, {"--n", "n"}, {"--seed", "cartoon.seed"}, {"--input", "input"},
        {"--lowpass", "lowpass"}, {"--lo-exp", "lo_exp"}, {"--hi-exp", "hi_exp"}}},
      {"molecule-check", "Check a frame's generators against a molecule order", cmd_molecule_check,
       {{"--family", "frame.family"}, {"--alpha", "frame.alpha"}, {"--J", "frame.J"}, {"--n", "n"},
        {"--levels", "levels"}}},
  };

  struct Bound {
    CLI::App* sub;
    std::string config_path, out;
    std::vector<std::string> sets;
    std::map<std::string, std::string> values;
  };
  std::vector<Bound> bound(verbs.size());
  for (std::size_t v = 0; v < verbs.size(); ++v) {
    auto& b = bound[v];
    b.sub = app.add_subcommand(verbs[v].name, verbs[v].help);
    b.sub->add_option("--config", b.config_path, "JSON run configuration");
    b.sub->add_option("--out", b.out, "Output directory (default $AMOL_OUTPUT_ROOT/<verb>)");
    b.sub->add_option("--set", b.sets, "Override a config field: path=value (repeatable)");
    for (const auto& [flag, path] : verbs[v].flags) b.sub->add_option(flag, b.values[path], "Sets " + path);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  for (std::size_t v = 0; v < verbs.size(); ++v) {
    auto& b = bound[v];
    if (!b.sub->parsed()) continue;
    Run run;
    run.command = verbs[v].name;
    try {
      run.config = Json::object();
      if (!b.config_path.empty()) {
        run.config = Json::parse(amol::read_file(b.config_path));
        if (!run.config.is_object()) throw UsageError("config must be a JSON object");
      }
      for (const auto& [flag, path] : verbs[v].flags)
        if (b.sub->count(flag) > 0) set_path(run.config, path, flag_value(b.values[path]));
      for (const auto& s : b.sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--set expects path=value, got '" + s + "'");
        set_path(run.config, s.substr(0, eq), flag_value(s.substr(eq + 1)));
      }
      std::string out = b.out.empty() ? get<std::string>(run.config, "out", "") : b.out;
      if (out.empty()) out = (fs::path(output_root()) / run.command).string();
      run.config.erase("out");
      run.out = out;
      fs::create_directories(run.out);

      const auto t0 = std::chrono::steady_clock::now();
      const int rc = verbs[v].run(run);
      const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      run.write_json("config.json", run.config);
      const Json manifest{{"command", run.command},
                          {"config_hash", amol::hex64(amol::fnv1a64(run.config.dump()))},
                          {"tool_version", kVersion},
                          {"wall_time_s", wall},
                          {"artifacts", run.artifacts},
                          {"summary", run.summary},
                          {"exit_code", rc}};
      amol::write_file_atomic((run.out / "manifest.json").string(), manifest.dump(2) + "\n");
      std::cout << run.summary.dump() << "\n";
      return rc;
    } catch (const UsageError& e) {
      std::cerr << run.command << ": " << e.what() << "\n";
      return 1;
    } catch (const nlohmann::json::exception& e) {
      std::cerr << run.command << ": bad JSON: " << e.what() << "\n";
      return 1;
    } catch (const std::exception& e) {
      std::cerr << run.command << ": " << e.what() << "\n";
      return 1;
    }
  }
  return 1;
}
