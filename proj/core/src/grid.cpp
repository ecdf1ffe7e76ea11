#include "amol/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <tuple>

#include "amol/windows.hpp"

namespace amol {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void check_grid(int n) {
  if (!is_power_of_two(n) || n < 8) throw std::invalid_argument("grid side must be a power of two >= 8");
}

namespace {

struct PlanCache {
  std::mutex mu;
  std::map<std::tuple<int, int, int>, fftw_plan> plans;
  ~PlanCache() {
    for (auto& [k, p] : plans) fftw_destroy_plan(p);
  }
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

fftw_plan get_plan(int n1, int n2, int sign) {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto key = std::make_tuple(n1, n2, sign);
  auto it = c.plans.find(key);
  if (it != c.plans.end()) return it->second;
  auto* buf = fftw_alloc_complex(static_cast<std::size_t>(n1) * n2);
  fftw_plan p = fftw_plan_dft_2d(n1, n2, buf, buf, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
  c.plans.emplace(key, p);
  return p;
}

}  // namespace

void fft2_inplace(cplx* data, int n1, int n2, int sign) {
  auto* d = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(get_plan(n1, n2, sign), d, d);
}

Spectrum forward_fft(const Image& f) {
  Spectrum s(f.n);
  for (std::size_t i = 0; i < f.data.size(); ++i) s.data[i] = f.data[i];
  fft2_inplace(s.data.data(), f.n, f.n, -1);
  const double scale = 1.0 / (static_cast<double>(f.n) * f.n);
  for (auto& v : s.data) v *= scale;
  return s;
}

Image inverse_fft(const Spectrum& s) {
  std::vector<cplx> buf = s.data;
  fft2_inplace(buf.data(), s.n, s.n, +1);
  Image f(s.n);
  for (std::size_t i = 0; i < buf.size(); ++i) f.data[i] = buf[i].real();
  return f;
}

double norm_sq(const Image& f) { return inner(f, f); }

double inner(const Image& a, const Image& b) {
  if (a.n != b.n) throw std::invalid_argument("grid mismatch");
  long double s = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) s += a.data[i] * b.data[i];
  return static_cast<double>(s / a.data.size());
}

double relative_error(const Image& ref, const Image& approx) {
  Image d(ref.n);
  for (std::size_t i = 0; i < d.data.size(); ++i) d.data[i] = ref.data[i] - approx.data[i];
  return std::sqrt(norm_sq(d) / norm_sq(ref));
}

Image random_bandlimited_image(int n, double radius, std::uint64_t seed) {
  check_grid(n);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Image noise(n);
  for (auto& v : noise.data) v = gauss(rng);
  Spectrum s = forward_fft(noise);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const double r = std::hypot(centered(a, n), centered(b, n));
      if (r > radius || a == n / 2 || b == n / 2) s.data[static_cast<std::size_t>(a) * n + b] = 0;
    }
  Image f = inverse_fft(s);
  const double nrm = std::sqrt(norm_sq(f));
  if (nrm > 0)
    for (auto& v : f.data) v /= nrm;
  return f;
}

Image smooth_lowpass(const Image& f, double cutoff) {
  Spectrum s = forward_fft(f);
  const int n = f.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const double r = std::hypot(centered(a, n), centered(b, n));
      s.data[static_cast<std::size_t>(a) * n + b] *= radial_lowpass(2.0 * r / cutoff);
    }
  return inverse_fft(s);
}

}  // namespace amol
