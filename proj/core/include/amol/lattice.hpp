#pragma once

#include <array>
#include <cstdint>

#include "amol/param.hpp"

namespace amol {

using IntMat2 = std::array<std::array<std::int64_t, 2>, 2>;

struct SmithForm {
  IntMat2 U{};  // unimodular, U * G * V = diag(d1, d2)
  IntMat2 V{};
  std::int64_t d1 = 1;
  std::int64_t d2 = 1;
};

// Smith normal form of a nonsingular integer matrix.
SmithForm smith_normal_form(const IntMat2& G);

// Translation lattice of one frequency band on the unit torus. Frequencies
// that differ by a column of G alias onto the same class; the spatial
// translates are the d1*d2 points of G^{-T} Z^2 modulo 1.
class BandLattice {
 public:
  BandLattice() = default;
  explicit BandLattice(const IntMat2& G);

  int d1() const { return static_cast<int>(d1_); }
  int d2() const { return static_cast<int>(d2_); }
  std::int64_t size() const { return d1_ * d2_; }
  const IntMat2& generator() const { return G_; }

  // Flat class index (row-major over d1 x d2) of an integer frequency.
  std::int64_t frequency_class(std::int64_t xi1, std::int64_t xi2) const;
  // Translation point in [0,1)^2 for the coefficient (k1, k2).
  Vec2 point(std::int64_t k1, std::int64_t k2) const;
  // Inverse of point(): coefficient nearest to x (exact on lattice points).
  std::array<std::int64_t, 2> nearest(Vec2 x) const;

 private:
  IntMat2 G_{};
  IntMat2 U_{};
  std::int64_t d1_ = 1, d2_ = 1;
};

}  // namespace amol
