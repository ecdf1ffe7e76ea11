#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace amol {

using cplx = std::complex<double>;

// Real image on the unit torus; sample (i1, i2) sits at x = (i1/n, i2/n)
// and is stored at offset i1*n + i2.
struct Image {
  int n = 0;
  std::vector<double> data;

  Image() = default;
  explicit Image(int side) : n(side), data(static_cast<std::size_t>(side) * side, 0.0) {}
  double& at(int i1, int i2) { return data[static_cast<std::size_t>(i1) * n + i2]; }
  double at(int i1, int i2) const { return data[static_cast<std::size_t>(i1) * n + i2]; }
};

// Fourier coefficients fhat(xi) = n^-2 sum f(x) exp(-2 pi i xi.x) in FFT order.
struct Spectrum {
  int n = 0;
  std::vector<cplx> data;

  Spectrum() = default;
  explicit Spectrum(int side) : n(side), data(static_cast<std::size_t>(side) * side) {}
};

// Centered integer frequency of an FFT index.
inline int centered(int idx, int n) { return idx < n / 2 ? idx : idx - n; }
// FFT index of a centered frequency.
inline int fft_index(int xi, int n) { return xi < 0 ? xi + n : xi; }

bool is_power_of_two(int n);
void check_grid(int n);

Spectrum forward_fft(const Image& f);
// Real part of the inverse transform.
Image inverse_fft(const Spectrum& s);

// Unnormalized in-place 2-D transforms (sign -1 forward, +1 backward).
void fft2_inplace(cplx* data, int n1, int n2, int sign);

// Mean of squares, i.e. the squared L2 norm on the unit torus.
double norm_sq(const Image& f);
double inner(const Image& a, const Image& b);
double relative_error(const Image& ref, const Image& approx);

// Random real image whose spectrum is supported in |xi| <= radius.
Image random_bandlimited_image(int n, double radius, std::uint64_t seed);

// Smooth radial low-pass: passes |xi| <= 0.75*cutoff, removes |xi| >= cutoff.
Image smooth_lowpass(const Image& f, double cutoff);

}  // namespace amol
