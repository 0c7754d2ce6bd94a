#pragma once

#include "ellmod/jet.hpp"
#include "ellmod/metric.hpp"
#include "ellmod/types.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <string>

namespace ellmod {

// Complex 3-form on the cover, expanded over the covector basis
//   0: dz   1: dz-bar   2: dalpha   3: dalpha-bar   4: ds   5: ds-bar
// Coefficients are stored on the 20 strictly increasing index triples in this
// order; add() canonicalizes arbitrary triples with the permutation sign.
class ThreeForm {
 public:
  static constexpr int kBasisSize = 20;

  // Rank of a strictly increasing triple in lexicographic order.
  static constexpr int index(int i, int j, int k) {
    int r = 0;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int c = b + 1; c < 6; ++c) {
          if (a == i && b == j && c == k) return r;
          ++r;
        }
    return -1;
  }

  static constexpr std::array<int, 3> triple(int idx) {
    int r = 0;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int c = b + 1; c < 6; ++c) {
          if (r == idx) return {a, b, c};
          ++r;
        }
    return {-1, -1, -1};
  }

  static std::string basis_label(int i) {
    static const char* names[6] = {"dz", "dzb", "da", "dab", "ds", "dsb"};
    return names[i];
  }

  // Accumulate coeff * e_i ^ e_j ^ e_k. Repeated indices vanish; otherwise the
  // triple is sorted and the coefficient picks up the permutation sign.
  void add(int i, int j, int k, Complex coeff) {
    if (i == j || j == k || i == k) return;
    int sign = 1;
    if (i > j) { std::swap(i, j); sign = -sign; }
    if (j > k) { std::swap(j, k); sign = -sign; }
    if (i > j) { std::swap(i, j); sign = -sign; }
    c_[index(i, j, k)] += double(sign) * coeff;
  }

  // Coefficient on an arbitrary triple, with the sign of the sort permutation.
  Complex coefficient(int i, int j, int k) const {
    if (i == j || j == k || i == k) return {0.0, 0.0};
    int sign = 1;
    if (i > j) { std::swap(i, j); sign = -sign; }
    if (j > k) { std::swap(j, k); sign = -sign; }
    if (i > j) { std::swap(i, j); sign = -sign; }
    return double(sign) * c_[index(i, j, k)];
  }

  const std::array<Complex, kBasisSize>& coefficients() const { return c_; }

  double max_abs() const {
    double m = 0.0;
    for (const Complex& c : c_) m = std::max(m, std::abs(c));
    return m;
  }

  // A form equal to its own complex conjugate satisfies, for every increasing
  // triple T with conjugate triple T* (indices flipped within each pair) and
  // sort sign sigma: c_{sorted T*} = sigma * conj(c_T). Returns the largest
  // violation of that relation.
  double reality_defect() const {
    double worst = 0.0;
    for (int idx = 0; idx < kBasisSize; ++idx) {
      auto [i, j, k] = triple(idx);
      int ci = i ^ 1, cj = j ^ 1, ck = k ^ 1;
      int sign = 1;
      if (ci > cj) { std::swap(ci, cj); sign = -sign; }
      if (cj > ck) { std::swap(cj, ck); sign = -sign; }
      if (ci > cj) { std::swap(ci, cj); sign = -sign; }
      const Complex expected = double(sign) * std::conj(c_[idx]);
      worst = std::max(worst, std::abs(c_[index(ci, cj, ck)] - expected));
    }
    return worst;
  }

 private:
  std::array<Complex, kBasisSize> c_{};
};

// Exterior derivative of omega = i sum_{j,k} h_{jk} dz_j ^ dz-bar_k, where the
// coefficient field is re-evaluated on jets and expanded in Wirtinger form:
//   d omega = i sum_{j,k,l} (d_l h_{jk} dz_l + dbar_l h_{jk} dzbar_l) ^ dz_j ^ dzbar_k
template <typename Field>
ThreeForm exterior_derivative_omega(const Field& field, const TotalSpacePoint& p) {
  const Matrix3<Jet6> h = field(seed_jets(p));
  const Complex I(0.0, 1.0);
  ThreeForm form;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) {
        const Coord cl = static_cast<Coord>(l);
        form.add(2 * l, 2 * j, 2 * k + 1, I * wirtinger(h(j, k), cl, false));
        form.add(2 * l + 1, 2 * j, 2 * k + 1, I * wirtinger(h(j, k), cl, true));
      }
  return form;
}

// Largest violation of the coefficient symmetry d_l h_{jk} = d_j h_{lk} over
// the active coordinate set. Zero exactly when the form restricted to those
// coordinates is closed.
template <typename Field>
double kahler_defect(const Field& field, const TotalSpacePoint& p,
                     std::initializer_list<Coord> active) {
  const Matrix3<Jet6> h = field(seed_jets(p));
  double worst = 0.0;
  for (Coord j : active)
    for (Coord k : active)
      for (Coord l : active) {
        const Complex lhs = wirtinger(h(int(j), int(k)), l, false);
        const Complex rhs = wirtinger(h(int(l), int(k)), j, false);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
  return worst;
}

// The same criterion read off the exterior derivative directly: the largest
// coefficient magnitude of d(omega restricted to the active coordinates).
// Independent route, used to cross-check kahler_defect.
template <typename Field>
double kahler_defect_via_dform(const Field& field, const TotalSpacePoint& p,
                               std::initializer_list<Coord> active) {
  const Matrix3<Jet6> h = field(seed_jets(p));
  const Complex I(0.0, 1.0);
  ThreeForm form;
  for (Coord cj : active)
    for (Coord ck : active)
      for (Coord cl : active) {
        const int j = int(cj), k = int(ck), l = int(cl);
        form.add(2 * l, 2 * j, 2 * k + 1, I * wirtinger(h(j, k), cl, false));
        form.add(2 * l + 1, 2 * j, 2 * k + 1, I * wirtinger(h(j, k), cl, true));
      }
  return form.max_abs();
}

// Fibers of the two fibrations of the total space:
//   NU:  s held fixed, coordinates (z, alpha)
//   ETA: alpha held fixed, coordinates (z, s)
enum class FiberKind { NU, ETA };

// 2x2 block of a hermitian field along a fiber through p.
template <typename Field>
Matrix2c restrict_to_fiber(const Field& field, FiberKind kind, const TotalSpacePoint& p) {
  const Matrix3<Complex> h = field(p.coords());
  const int idx[2] = {0, kind == FiberKind::NU ? 1 : 2};
  Matrix2c r;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) r(a, b) = h(idx[a], idx[b]);
  return r;
}

inline std::initializer_list<Coord> active_coords(FiberKind kind) {
  static constexpr std::initializer_list<Coord> nu = {Coord::Z, Coord::ALPHA};
  static constexpr std::initializer_list<Coord> eta = {Coord::Z, Coord::S};
  return kind == FiberKind::NU ? nu : eta;
}

}  // namespace ellmod
