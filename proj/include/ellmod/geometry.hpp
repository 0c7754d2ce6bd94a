#pragma once

#include "ellmod/types.hpp"

#include <Eigen/Eigenvalues>

namespace ellmod {

// Largest entrywise deviation from conjugate symmetry, |h - h^*|_max.
inline double conjugate_asymmetry(const HermitianMatrix3& h) {
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

inline double smallest_eigenvalue(const HermitianMatrix3& h) {
  Eigen::SelfAdjointEigenSolver<HermitianMatrix3> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

inline double smallest_eigenvalue(const RealMetric6& g) {
  Eigen::SelfAdjointEigenSolver<RealMetric6> es(g, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// Riemannian form of a hermitian coefficient matrix on the underlying real
// tangent space: G(u, w) = Re sum_{j,k} h_{jk} u_j conj(w_k), where a real
// tangent vector (a1, b1, a2, b2, a3, b3) has complex components u_j = a_j + i b_j.
// No factor of 2 anywhere. Each complex entry h becomes the 2x2 block
//   [ Re h   Im h ]
//   [-Im h   Re h ]
// Throws SymmetryError if the input is not conjugate symmetric, since the
// result would not be a symmetric bilinear form.
inline RealMetric6 to_real_metric(const HermitianMatrix3& h, double tol = 1e-10) {
  if (conjugate_asymmetry(h) > tol) {
    throw SymmetryError("to_real_metric: input is not conjugate symmetric");
  }
  RealMetric6 g;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      const Complex hjk = h(j, k);
      g(2 * j, 2 * k) = hjk.real();
      g(2 * j, 2 * k + 1) = hjk.imag();
      g(2 * j + 1, 2 * k) = -hjk.imag();
      g(2 * j + 1, 2 * k + 1) = hjk.real();
    }
  }
  return g;
}

// Pullback of a hermitian form along a holomorphic map with Jacobian J at the
// source point, h evaluated at the image point:
//   (F*h)(j, k) = sum_{l,m} h(l, m) J(l, j) conj(J(m, k))
inline HermitianMatrix3 pullback_holomorphic(const HermitianMatrix3& h_at_image,
                                             const ComplexJacobian3& J) {
  return J.transpose() * h_at_image * J.conjugate();
}

// Pullback of a real bilinear form along a smooth map with real Jacobian Jr.
inline RealMetric6 pullback_real(const RealMetric6& g_at_image, const RealJacobian6& Jr) {
  return Jr.transpose() * g_at_image * Jr;
}

// Real 6x6 shadow of a complex Jacobian: each entry a + bi acts on (x, y)
// pairs as the rotation-scaling block [[a, -b], [b, a]].
inline RealJacobian6 realify(const ComplexJacobian3& J) {
  RealJacobian6 R;
  for (int l = 0; l < 3; ++l) {
    for (int j = 0; j < 3; ++j) {
      const double a = J(l, j).real();
      const double b = J(l, j).imag();
      R(2 * l, 2 * j) = a;
      R(2 * l, 2 * j + 1) = -b;
      R(2 * l + 1, 2 * j) = b;
      R(2 * l + 1, 2 * j + 1) = a;
    }
  }
  return R;
}

}  // namespace ellmod
