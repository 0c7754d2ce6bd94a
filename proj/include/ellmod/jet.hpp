#pragma once

#include "ellmod/point.hpp"
#include "ellmod/types.hpp"

#include <array>

namespace ellmod {

// Forward-mode first-derivative carrier: a complex value together with its six
// partial derivatives with respect to the real coordinates
//   slot 0: x = Re z    slot 1: y = Im z
//   slot 2: Re alpha    slot 3: Im alpha
//   slot 4: sigma       slot 5: t = Im s
// Arithmetic propagates the chain rule. Because differentiation is with
// respect to real coordinates, conj acts componentwise and is exact.
struct Jet6 {
  Complex value{0.0, 0.0};
  std::array<Complex, 6> d{};

  Jet6() = default;
  Jet6(double re) : value(re) {}
  Jet6(const Complex& c) : value(c) {}
};

inline Jet6 operator+(const Jet6& a, const Jet6& b) {
  Jet6 r(a.value + b.value);
  for (int i = 0; i < 6; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}

inline Jet6 operator-(const Jet6& a, const Jet6& b) {
  Jet6 r(a.value - b.value);
  for (int i = 0; i < 6; ++i) r.d[i] = a.d[i] - b.d[i];
  return r;
}

inline Jet6 operator-(const Jet6& a) {
  Jet6 r(-a.value);
  for (int i = 0; i < 6; ++i) r.d[i] = -a.d[i];
  return r;
}

inline Jet6 operator*(const Jet6& a, const Jet6& b) {
  Jet6 r(a.value * b.value);
  for (int i = 0; i < 6; ++i) r.d[i] = a.d[i] * b.value + a.value * b.d[i];
  return r;
}

inline Jet6 operator/(const Jet6& a, const Jet6& b) {
  Jet6 r(a.value / b.value);
  for (int i = 0; i < 6; ++i) r.d[i] = (a.d[i] - r.value * b.d[i]) / b.value;
  return r;
}

inline Jet6 conj(const Jet6& a) {
  Jet6 r(std::conj(a.value));
  for (int i = 0; i < 6; ++i) r.d[i] = std::conj(a.d[i]);
  return r;
}

inline bool operator==(const Jet6& a, const Jet6& b) {
  return a.value == b.value && a.d == b.d;
}

// Jet of a coordinate function: d/d(real part) = 1, d/d(imag part) = i.
inline Jet6 coordinate_jet(Complex value, int real_slot) {
  Jet6 j(value);
  j.d[real_slot] = Complex(1.0, 0.0);
  j.d[real_slot + 1] = Complex(0.0, 1.0);
  return j;
}

// Seed the three complex coordinates of a point for differentiation.
inline PointT<Jet6> seed_jets(const TotalSpacePoint& p) {
  return {coordinate_jet(p.z(), 0), coordinate_jet(p.alpha(), 2), coordinate_jet(p.s(), 4)};
}

enum class Coord { Z = 0, ALPHA = 1, S = 2 };

// Wirtinger derivative read off a propagated jet. For the complex coordinate
// w with real slots (k, k+1):
//   d/dw     = (d/d Re w - i d/d Im w) / 2
//   d/dw-bar = (d/d Re w + i d/d Im w) / 2
inline Complex wirtinger(const Jet6& j, Coord c, bool barred) {
  const int k = 2 * static_cast<int>(c);
  const Complex i(0.0, 1.0);
  return barred ? 0.5 * (j.d[k] + i * j.d[k + 1]) : 0.5 * (j.d[k] - i * j.d[k + 1]);
}

}  // namespace ellmod

// Minimal scalar traits so Eigen matrices can hold jets. Matrices of jets are
// used as containers (filled and read entrywise); Eigen never needs to invert
// or decompose them.
namespace Eigen {

template <>
struct NumTraits<ellmod::Jet6> {
  using Real = ellmod::Jet6;
  using NonInteger = ellmod::Jet6;
  using Nested = ellmod::Jet6;
  using Literal = ellmod::Jet6;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 7,
    AddCost = 14,
    MulCost = 28,
  };
  static inline Real epsilon() { return Real(NumTraits<double>::epsilon()); }
  static inline Real dummy_precision() { return Real(NumTraits<double>::dummy_precision()); }
  static inline Real highest() { return Real(NumTraits<double>::highest()); }
  static inline Real lowest() { return Real(NumTraits<double>::lowest()); }
  static inline int digits10() { return NumTraits<double>::digits10(); }
};

}  // namespace Eigen
