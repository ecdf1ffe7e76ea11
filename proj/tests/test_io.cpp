#include <cmath>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "amol/io.hpp"
#include "amol/serialize.hpp"

using namespace amol;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("amol_io_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST(ImageContainer, RoundTrip) {
  const auto dir = scratch("rt");
  const Image f = random_bandlimited_image(32, 8, 2);
  write_image((dir / "f.f64").string(), f);
  EXPECT_EQ(fs::file_size(dir / "f.f64"), 32u * 32u * 8u);
  const auto side = nlohmann::json::parse(read_file((dir / "f.f64.json").string()));
  EXPECT_EQ(side["n"], 32);
  EXPECT_EQ(side["dtype"], "f64le");
  EXPECT_EQ(side["domain"], "unit-torus");
  const Image g = read_image((dir / "f.f64").string());
  EXPECT_EQ(f.data, g.data);
}

TEST(ImageContainer, BadHeaders) {
  const auto dir = scratch("bad");
  const Image f(16);
  const auto path = (dir / "f.f64").string();
  write_image(path, f);
  write_file_atomic(path + ".json", R"({"n": 16, "domain": "unit-torus", "dtype": "f32le"})");
  EXPECT_THROW(read_image(path), std::runtime_error);
  write_file_atomic(path + ".json", R"({"n": 32, "domain": "unit-torus", "dtype": "f64le"})");
  EXPECT_THROW(read_image(path), std::runtime_error);
  write_file_atomic(path + ".json", "{not json");
  EXPECT_THROW(read_image(path), std::runtime_error);
  EXPECT_THROW(read_image((dir / "missing.f64").string()), std::runtime_error);
}

TEST(Format, SeventeenDigitsRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, kPi}) EXPECT_EQ(std::stod(format_double(v)), v);
}

TEST(Hash, KnownVectors) {
  EXPECT_EQ(hex64(fnv1a64("")), "cbf29ce484222325");
  EXPECT_EQ(hex64(fnv1a64("a")), "af63dc4c8601ec8c");
}

TEST(AtomicWrite, Overwrites) {
  const auto dir = scratch("atomic");
  const auto p = (dir / "sub" / "x.txt").string();
  write_file_atomic(p, "one");
  write_file_atomic(p, "two");
  EXPECT_EQ(read_file(p), "two");
  EXPECT_FALSE(fs::exists(p + ".tmp"));
}

TEST(CoefficientsCsv, Layout) {
  const auto fr = build_wavelet_frame(2.0, 1.0, 1, 16);
  const auto c = fr.analyze(random_bandlimited_image(16, 4, 1));
  const auto csv = coefficients_csv(fr, c);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "family,eps,j,l,k1,k2,re,im");
  std::int64_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, fr.size());
  CoefficientSet wrong = c;
  wrong.values.pop_back();
  EXPECT_THROW(coefficients_csv(fr, wrong), std::invalid_argument);
}

TEST(ParametrizationJson, RoundTrip) {
  for (auto p : {make_curvelet_parametrization(0.5), make_shearlet_parametrization(0.25, 3.0, 0.5),
                 make_wavelet_parametrization(2.0, 0.5)}) {
    p.truncation = {5, 0.5};
    const Json j = to_json(p);
    EXPECT_TRUE(j.contains("kind"));
    EXPECT_TRUE(j.contains("truncation"));
    const auto q = parametrization_from_json(j);
    EXPECT_EQ(to_json(q).dump(), j.dump());
  }
  EXPECT_THROW(parametrization_from_json(Json{{"kind", "ridgelet"}}), std::invalid_argument);
  EXPECT_THROW(parametrization_from_json(Json{{"kind", "curvelet"}}), std::invalid_argument);
}

TEST(CartoonJson, RoundTrip) {
  const auto s = random_cartoon_spec(2.0, 5);
  const auto t = cartoon_from_json(Json::parse(to_json(s).dump()));
  EXPECT_EQ(to_json(t).dump(), to_json(s).dump());
  EXPECT_EQ(generate_cartoon(s, 64).data, generate_cartoon(t, 64).data);
}

TEST(ReportJson, InfinitiesAreStrings) {
  OrderCertificate c;
  c.ratio = INFINITY;
  c.order = {kInfiniteOrder, 1, 2, 3};
  const Json j = to_json(c);
  EXPECT_EQ(j["ratio"], "inf");
  EXPECT_EQ(j["order"]["L"], "inf");
}

TEST(Csv, LadderAndSamples) {
  ConsistencyReport r;
  r.rungs.resize(2);
  r.rungs[1].sup_ab = 1.5;
  const auto csv = ladder_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "rung,supAB,supBA,increment");
  EXPECT_NE(csv.find("1,1.5,0,0"), std::string::npos);
  const auto s = samples_csv({GramianSample{}});
  EXPECT_EQ(s.substr(0, s.find('\n')), "omega,magnitude,jA,jB,angle_gap,offset");
}
