#pragma once

#include "ellmod/geometry.hpp"
#include "ellmod/jet.hpp"
#include "ellmod/point.hpp"
#include "ellmod/types.hpp"

#include <cstdint>

namespace ellmod {

// Deck transformation of the universal cover of the fiber torus:
// z -> z + n + m s with the parameters fixed.
struct DeckElement {
  std::int64_t n = 0;
  std::int64_t m = 0;
};

inline DeckElement operator*(const DeckElement& g1, const DeckElement& g2) {
  return {g1.n + g2.n, g1.m + g2.m};
}

template <typename Scalar>
PointT<Scalar> deck_apply(const DeckElement& g, const PointT<Scalar>& p) {
  return {p.z + double(g.n) + double(g.m) * p.s, p.alpha, p.s};
}

inline TotalSpacePoint deck_apply(const DeckElement& g, const TotalSpacePoint& p) {
  const Point q = deck_apply(g, p.coords());
  return make_point(q.z, q.alpha, q.s);
}

// Holomorphic Jacobian of a deck transformation: identity except dz'/ds = m.
inline ComplexJacobian3 deck_jacobian(const DeckElement& g) {
  ComplexJacobian3 J = ComplexJacobian3::Identity();
  J(0, 2) = double(g.m);
  return J;
}

// Element of the modular group SL(2, Z), acting on the total space by
//   z -> z / (c s + d),  alpha -> alpha,  s -> (a s + b) / (c s + d)
struct ModularElement {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 1;

  std::int64_t det() const { return a * d - b * c; }
};

inline ModularElement operator*(const ModularElement& g1, const ModularElement& g2) {
  return {g1.a * g2.a + g1.b * g2.c, g1.a * g2.b + g1.b * g2.d,
          g1.c * g2.a + g1.d * g2.c, g1.c * g2.b + g1.d * g2.d};
}

inline ModularElement modular_T() { return {1, 1, 0, 1}; }
inline ModularElement modular_S() { return {0, -1, 1, 0}; }

template <typename Scalar>
PointT<Scalar> modular_apply(const ModularElement& g, const PointT<Scalar>& p) {
  const Scalar q = double(g.c) * p.s + double(g.d);
  return {p.z / q, p.alpha, (double(g.a) * p.s + double(g.b)) / q};
}

inline TotalSpacePoint modular_apply(const ModularElement& g, const TotalSpacePoint& p) {
  const Point q = modular_apply(g, p.coords());
  return make_point(q.z, q.alpha, q.s);
}

// Holomorphic Jacobian of the modular action at p. The action composes like
// matrix multiplication, and so do these Jacobians (chain rule).
inline ComplexJacobian3 modular_jacobian(const ModularElement& g, const TotalSpacePoint& p) {
  const Complex q = double(g.c) * p.s() + double(g.d);
  ComplexJacobian3 J = ComplexJacobian3::Zero();
  J(0, 0) = 1.0 / q;
  J(0, 2) = -double(g.c) * p.z() / (q * q);
  J(1, 1) = 1.0;
  J(2, 2) = 1.0 / (q * q);
  return J;
}

// The two fibrations of the total space.
inline Complex nu_projection(const TotalSpacePoint& p) { return p.s(); }   // modulus
inline Complex eta_projection(const TotalSpacePoint& p) { return p.alpha(); }  // Kahler parameter

// R-linear endomorphism of C, stored in the basis (1, i).
class RealLinearMap {
 public:
  explicit RealLinearMap(const Eigen::Matrix2d& m) : m_(m) {}

  Complex operator()(Complex z) const {
    return {m_(0, 0) * z.real() + m_(0, 1) * z.imag(),
            m_(1, 0) * z.real() + m_(1, 1) * z.imag()};
  }

  const Eigen::Matrix2d& matrix() const { return m_; }
  double det() const { return m_.determinant(); }

 private:
  Eigen::Matrix2d m_;
};

// The unique R-linear map with L(1) = 1 and L(s) = alpha: the marked lattice
// identification between the torus of modulus s and the torus of modulus alpha.
inline RealLinearMap real_linear_L(Complex alpha, Complex s) {
  if (s.imag() == 0.0) {
    throw DegenerateBasisError("real_linear_L: Im(s) = 0, the lattice basis (1, s) is degenerate");
  }
  Eigen::Matrix2d m;
  m << 1.0, (alpha.real() - s.real()) / s.imag(),
       0.0, alpha.imag() / s.imag();
  return RealLinearMap(m);
}

// Mirror involution swapping the two parameters and transporting the fiber
// coordinate by the marked lattice identification. Writing z = u + w s with
// real cell coordinates (u, w), the image is (u + w alpha, s, alpha). The
// conjugation form below is equivalent and evaluates on any scalar:
//   w = (z - conj z) / (s - conj s),  u = (z + conj z - (s + conj s) w) / 2
template <typename Scalar>
PointT<Scalar> mirror_map(const PointT<Scalar>& p) {
  const Scalar w = (p.z - conj(p.z)) / (p.s - conj(p.s));
  const Scalar u = (p.z + conj(p.z) - (p.s + conj(p.s)) * w) * 0.5;
  return {u + w * p.alpha, p.s, p.alpha};
}

inline TotalSpacePoint mirror_map(const TotalSpacePoint& p) {
  const Point q = mirror_map(p.coords());
  return make_point(q.z, q.alpha, q.s);
}

// Full real 6x6 Jacobian of the mirror map in the coordinate order
// (x, y, Re alpha, Im alpha, sigma, t), computed by propagating jets. The map
// is R-linear in z but not holomorphic, so the complex Jacobian does not exist
// and pullbacks along it must go through the real form.
inline RealJacobian6 mirror_jacobian_real(const TotalSpacePoint& p) {
  const PointT<Jet6> q = mirror_map(seed_jets(p));
  const Jet6* out[3] = {&q.z, &q.alpha, &q.s};
  RealJacobian6 J;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 6; ++c) {
      J(2 * r, c) = out[r]->d[c].real();
      J(2 * r + 1, c) = out[r]->d[c].imag();
    }
  return J;
}

}  // namespace ellmod
