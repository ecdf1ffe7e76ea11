#include "amol/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace amol {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void swap_rows(IntMat2& A, int a, int b) { std::swap(A[a], A[b]); }
void swap_cols(IntMat2& A, int a, int b) {
  for (auto& row : A) std::swap(row[a], row[b]);
}
// row[dst] += f * row[src]
void add_row(IntMat2& A, int dst, int src, std::int64_t f) {
  for (int c = 0; c < 2; ++c) A[dst][c] += f * A[src][c];
}
void add_col(IntMat2& A, int dst, int src, std::int64_t f) {
  for (int r = 0; r < 2; ++r) A[r][dst] += f * A[r][src];
}

}  // namespace

SmithForm smith_normal_form(const IntMat2& G) {
  const std::int64_t det = G[0][0] * G[1][1] - G[0][1] * G[1][0];
  if (det == 0) throw std::invalid_argument("singular lattice generator");
  IntMat2 A = G;
  IntMat2 U{{{1, 0}, {0, 1}}};
  IntMat2 V{{{1, 0}, {0, 1}}};
  for (int guard = 0; guard < 10000; ++guard) {
    // pivot: smallest nonzero magnitude to (0,0)
    int pr = -1, pc = -1;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        if (A[r][c] != 0 && (pr < 0 || std::llabs(A[r][c]) < std::llabs(A[pr][pc]))) pr = r, pc = c;
    if (pr != 0) swap_rows(A, 0, 1), swap_rows(U, 0, 1);
    if (pc != 0) swap_cols(A, 0, 1), swap_cols(V, 0, 1);
    bool clean = true;
    if (A[1][0] != 0) {
      const std::int64_t q = A[1][0] / A[0][0];
      add_row(A, 1, 0, -q), add_row(U, 1, 0, -q);
      if (A[1][0] != 0) clean = false;
    }
    if (A[0][1] != 0) {
      const std::int64_t q = A[0][1] / A[0][0];
      add_col(A, 1, 0, -q), add_col(V, 1, 0, -q);
      if (A[0][1] != 0) clean = false;
    }
    if (!clean) continue;
    if (A[1][1] % A[0][0] != 0) {
      add_row(A, 0, 1, 1), add_row(U, 0, 1, 1);
      continue;
    }
    break;
  }
  for (int r = 0; r < 2; ++r)
    if (A[r][r] < 0) {
      for (int c = 0; c < 2; ++c) A[r][c] = -A[r][c], U[r][c] = -U[r][c];
    }
  return {U, V, A[0][0], A[1][1]};
}

BandLattice::BandLattice(const IntMat2& G) : G_(G) {
  const SmithForm s = smith_normal_form(G);
  U_ = s.U;
  d1_ = s.d1;
  d2_ = s.d2;
}

std::int64_t BandLattice::frequency_class(std::int64_t xi1, std::int64_t xi2) const {
  const std::int64_t m1 = mod(U_[0][0] * xi1 + U_[0][1] * xi2, d1_);
  const std::int64_t m2 = mod(U_[1][0] * xi1 + U_[1][1] * xi2, d2_);
  return m1 * d2_ + m2;
}

Vec2 BandLattice::point(std::int64_t k1, std::int64_t k2) const {
  // x = U^T (k1/d1, k2/d2) mod 1, with exact integer numerators
  const std::int64_t L = d1_ * d2_;
  const std::int64_t a1 = k1 * d2_, a2 = k2 * d1_;
  const std::int64_t n1 = mod(U_[0][0] * a1 + U_[1][0] * a2, L);
  const std::int64_t n2 = mod(U_[0][1] * a1 + U_[1][1] * a2, L);
  return {static_cast<double>(n1) / L, static_cast<double>(n2) / L};
}

std::array<std::int64_t, 2> BandLattice::nearest(Vec2 x) const {
  // k = D U^{-T} x (mod d); U^{-T} from the adjugate since det U = +-1
  const double det = static_cast<double>(U_[0][0] * U_[1][1] - U_[0][1] * U_[1][0]);
  const double y1 = (U_[1][1] * x.x - U_[1][0] * x.y) / det;
  const double y2 = (-U_[0][1] * x.x + U_[0][0] * x.y) / det;
  const auto k1 = static_cast<std::int64_t>(std::llround(y1 * d1_));
  const auto k2 = static_cast<std::int64_t>(std::llround(y2 * d2_));
  return {mod(k1, d1_), mod(k2, d2_)};
}

}  // namespace amol
