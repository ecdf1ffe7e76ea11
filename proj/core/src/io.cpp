#include "amol/io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace amol {

namespace {

static_assert(std::endian::native == std::endian::little, "the image container assumes a little-endian host");

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  const fs::path tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, p);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_image(const std::string& path, const Image& f) {
  check_grid(f.n);
  if (f.data.size() != static_cast<std::size_t>(f.n) * f.n)
    throw std::invalid_argument("write_image: data size does not match n");
  std::string raw(f.data.size() * sizeof(double), '\0');
  std::memcpy(raw.data(), f.data.data(), raw.size());
  write_file_atomic(path, raw);
  const nlohmann::ordered_json side{{"n", f.n}, {"domain", "unit-torus"}, {"dtype", "f64le"}};
  write_file_atomic(path + ".json", side.dump(2) + "\n");
}

Image read_image(const std::string& path) {
  nlohmann::json side;
  try {
    side = nlohmann::json::parse(read_file(path + ".json"));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("bad image header " + path + ".json: " + e.what());
  }
  if (!side.is_object() || !side.contains("n") || !side["n"].is_number_integer())
    throw std::runtime_error("bad image header: missing integer n");
  if (side.value("dtype", std::string{}) != "f64le")
    throw std::runtime_error("bad image header: dtype must be f64le");
  if (side.value("domain", std::string{}) != "unit-torus")
    throw std::runtime_error("bad image header: domain must be unit-torus");
  const int n = side["n"].get<int>();
  check_grid(n);
  const std::string raw = read_file(path);
  Image f(n);
  if (raw.size() != f.data.size() * sizeof(double))
    throw std::runtime_error("bad image data: expected " + std::to_string(f.data.size() * sizeof(double)) +
                             " bytes, found " + std::to_string(raw.size()));
  std::memcpy(f.data.data(), raw.data(), raw.size());
  return f;
}

std::string coefficients_csv(const Frame& frame, const CoefficientSet& c) {
  if (c.n != frame.n || static_cast<std::int64_t>(c.values.size()) != frame.size())
    throw std::invalid_argument("coefficients do not belong to this frame");
  std::string out = "family,eps,j,l,k1,k2,re,im\n";
  const std::string fam = family_name(frame.family);
  for (const auto& b : frame.bands) {
    const std::int64_t d2 = b.lattice.d2();
    for (std::int64_t i = 0; i < b.count(); ++i) {
      const cplx v = c.values[static_cast<std::size_t>(b.offset + i)];
      out += fam + ',' + std::to_string(b.eps) + ',' + std::to_string(b.j) + ',' + std::to_string(b.l) + ',' +
             std::to_string(i / d2) + ',' + std::to_string(i % d2) + ',' + format_double(v.real()) + ',' +
             format_double(v.imag()) + '\n';
    }
  }
  return out;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace amol
