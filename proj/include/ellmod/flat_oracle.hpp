#pragma once

#include "ellmod/jet.hpp"
#include "ellmod/point.hpp"
#include "ellmod/types.hpp"

#include <cmath>
#include <functional>

namespace ellmod {

// Independent evaluations of the metric blocks from their geometric
// definitions on the flat torus C / (Z + sZ), carried out by quadrature over
// the fundamental cell. These never touch the closed-form block functions, so
// agreement between the two is a real check.
//
// Conventions, fixed once for all oracles:
//   lambda = Im(alpha) / Im(s) is the coefficient of the unique flat metric
//     lambda |dz|^2 (Ricci-flat representative) in the polarization class, so
//     |dz|^2_flat = 1 / lambda and |d/dz|^2_flat = lambda.
//   Pointwise norms of decomposable tensors multiply factorwise.
//   The volume form is lambda (i/2) dz ^ dz-bar, i.e. density lambda against
//     the euclidean area element dx dy; total fiber volume is Im(alpha).

// lambda as a function of the two parameters.
inline double ricci_flat_coefficient(Complex alpha, Complex s) {
  return alpha.imag() / s.imag();
}

// Midpoint-rule integral over the fundamental cell {u + w s : u, w in [0,1)}
// against the euclidean area form dx dy = Im(s) du dw. Compensated (Kahan)
// summation keeps the result independent of the evaluation order at 1e-15.
inline Complex fundamental_domain_integral(const std::function<Complex(double, double)>& f,
                                           Complex s, int n = 32) {
  if (n < 1) throw ConfigError("fundamental_domain_integral: n must be >= 1");
  Complex sum(0.0, 0.0);
  Complex comp(0.0, 0.0);
  for (int i = 0; i < n; ++i) {
    const double u = (i + 0.5) / n;
    for (int j = 0; j < n; ++j) {
      const double w = (j + 0.5) / n;
      const Complex y = f(u, w) - comp;
      const Complex t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
  }
  return sum * (s.imag() / (double(n) * double(n)));
}

// Constant-coefficient (1,1)-form f (i/2) dz ^ dz-bar representing the Kahler
// direction d/d(alpha) on the fiber over s: the harmonic representative has
// f = 1 / Im(s), so that its integral over the fiber is 1.
struct HarmonicOneOneForm {
  Complex f;
};

inline HarmonicOneOneForm kahler_direction_form(Complex s) {
  return {Complex(1.0 / s.imag(), 0.0)};
}

// Squared L2 norm of the Kahler direction in the flat metric of the class:
// the integrand is the pointwise squared norm of f (i/2) dz ^ dz-bar, which is
// |f|^2 / (4 lambda^2), times the volume density lambda. Closed form: 1 / (4 Im alpha).
inline double l2_metric_oracle(Complex alpha, Complex s, int n = 32) {
  const double lambda = ricci_flat_coefficient(alpha, s);
  const Complex f = kahler_direction_form(s).f;
  const double pointwise = std::norm(f) / (4.0 * lambda * lambda);
  auto integrand = [&](double, double) -> Complex { return pointwise * lambda; };
  return fundamental_domain_integral(integrand, s, n).real();
}

// Kodaira-Spencer representative of d/ds on the fiber over s: the harmonic
// (0,1)-form with values in the holomorphic tangent bundle,
//   c dz-bar (x) d/dz  with  c = 1 / (s - conj s).
struct KodairaSpencerRep {
  Complex c;
};

inline KodairaSpencerRep kodaira_spencer_rep(Complex s) {
  return {Complex(1.0, 0.0) / (s - std::conj(s))};
}

// Squared L2 norm of the Kodaira-Spencer representative. Pointwise,
// |dz-bar (x) d/dz|^2 = (1/lambda) * lambda = 1, so the integrand is |c|^2
// times the volume density. Closed form: Im(alpha) / (4 (Im s)^2).
inline double wp_metric_oracle(Complex alpha, Complex s, int n = 32) {
  const double lambda = ricci_flat_coefficient(alpha, s);
  const Complex c = kodaira_spencer_rep(s).c;
  auto integrand = [&](double, double) -> Complex { return std::norm(c) * lambda; };
  return fundamental_domain_integral(integrand, s, n).real();
}

// Coefficient of the canonical horizontal lift d/ds + c(z, s) d/dz of the
// modulus direction through the marked lattice trivialization:
//   c(z, s) = (z - conj z) / (s - conj s)
// Deck equivariant: c(z + n + m s, s) = c(z, s) + m.
template <typename Scalar>
Scalar canonical_lift_coefficient(const PointT<Scalar>& p) {
  return (p.z - conj(p.z)) / (p.s - conj(p.s));
}

inline Complex canonical_lift_coefficient(const TotalSpacePoint& p) {
  return canonical_lift_coefficient(p.coords());
}

// The lift is harmonic exactly when dbar_z c is the constant 1 / (conj s - s);
// returns |dbar_z c - 1 / (conj s - s)|, computed through jets.
inline double lift_harmonicity_defect(const TotalSpacePoint& p) {
  const Jet6 c = canonical_lift_coefficient(seed_jets(p));
  const Complex dbar = wirtinger(c, Coord::Z, true);
  const Complex target = 1.0 / (std::conj(p.s()) - p.s());
  return std::abs(dbar - target);
}

}  // namespace ellmod
