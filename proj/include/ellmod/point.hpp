#pragma once

#include "ellmod/types.hpp"

namespace ellmod {

// Raw coordinate triple on the cover C x H x H. Generic in the scalar type:
// the same formulas run on Complex and on jets.
template <typename Scalar>
struct PointT {
  Scalar z;      // fiber coordinate on the covering plane of the torus
  Scalar alpha;  // complexified Kahler parameter
  Scalar s;      // complex structure parameter of the fiber
};

using Point = PointT<Complex>;

// Validated point: both parameters lie strictly in the upper half plane.
// Construction goes through make_point, which enforces the domain.
class TotalSpacePoint {
 public:
  Complex z() const noexcept { return z_; }
  Complex alpha() const noexcept { return alpha_; }
  Complex s() const noexcept { return s_; }

  double x() const noexcept { return z_.real(); }
  double y() const noexcept { return z_.imag(); }
  double v() const noexcept { return alpha_.imag(); }  // Im alpha, the fiber volume
  double sigma() const noexcept { return s_.real(); }
  double t() const noexcept { return s_.imag(); }      // Im s

  Point coords() const noexcept { return {z_, alpha_, s_}; }

  friend TotalSpacePoint make_point(Complex z, Complex alpha, Complex s);

 private:
  TotalSpacePoint(Complex z, Complex alpha, Complex s) : z_(z), alpha_(alpha), s_(s) {}

  Complex z_;
  Complex alpha_;
  Complex s_;
};

inline TotalSpacePoint make_point(Complex z, Complex alpha, Complex s) {
  if (!(alpha.imag() > 0.0)) {
    throw DomainError("alpha", "make_point: Im(alpha) must be positive, got " +
                                   std::to_string(alpha.imag()));
  }
  if (!(s.imag() > 0.0)) {
    throw DomainError("s", "make_point: Im(s) must be positive, got " +
                               std::to_string(s.imag()));
  }
  return TotalSpacePoint(z, alpha, s);
}

}  // namespace ellmod
