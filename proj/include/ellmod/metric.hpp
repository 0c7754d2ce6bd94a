#pragma once

#include "ellmod/point.hpp"
#include "ellmod/types.hpp"

namespace ellmod {

// The four block functions of the hermitian metric on the cover. All four are
// real valued on the domain; the conjugations are kept literal so the code
// reads like the defining formulas rather than their real-variable shortcuts.
//
//   g_fiber = (alpha - conj alpha) / (s - conj s)      flat metric on the fiber
//   g_l2    = (i/2) / (alpha - conj alpha)             L2 block of the Kahler direction
//   g_wp    = (i/2) (alpha - conj alpha) / (s - conj s)^2   Weil-Petersson block
//   a       = -(z - conj z) / (s - conj s)             off-diagonal lift coefficient
template <typename Scalar>
struct MetricBlocksT {
  Scalar g_fiber;
  Scalar g_l2;
  Scalar g_wp;
  Scalar a;
};

using MetricBlocks = MetricBlocksT<Complex>;

template <typename Scalar>
MetricBlocksT<Scalar> blocks(const PointT<Scalar>& p) {
  const Scalar da = p.alpha - conj(p.alpha);
  const Scalar ds = p.s - conj(p.s);
  const Scalar half_i{Complex(0.0, 0.5)};
  MetricBlocksT<Scalar> b;
  b.g_fiber = da / ds;
  b.g_l2 = half_i / da;
  b.g_wp = half_i * da / (ds * ds);
  b.a = -(p.z - conj(p.z)) / ds;
  return b;
}

inline MetricBlocks blocks(const TotalSpacePoint& p) { return blocks(p.coords()); }

// Unchecked assembly shared by the complex and jet paths. Index order
// (z, alpha, s); the alpha row and column couple to nothing else.
template <typename Scalar>
Matrix3<Scalar> build_metric(const MetricBlocksT<Scalar>& b) {
  const Scalar zero{Complex(0.0, 0.0)};
  Matrix3<Scalar> h;
  h(0, 0) = b.g_fiber;
  h(0, 1) = zero;
  h(0, 2) = b.g_fiber * conj(b.a);
  h(1, 0) = zero;
  h(1, 1) = b.g_l2;
  h(1, 2) = zero;
  h(2, 0) = b.a * b.g_fiber;
  h(2, 1) = zero;
  h(2, 2) = b.g_wp + b.a * b.g_fiber * conj(b.a);
  return h;
}

// Checked assembly: the three diagonal blocks must have come out positive.
// On the valid domain they always do, so a throw here means the blocks were
// produced from an invalid point or corrupted in transit.
inline HermitianMatrix3 assemble_metric(const MetricBlocks& b) {
  if (!(b.g_fiber.real() > 0.0)) throw PositivityError("assemble_metric: g_fiber <= 0");
  if (!(b.g_l2.real() > 0.0)) throw PositivityError("assemble_metric: g_l2 <= 0");
  if (!(b.g_wp.real() > 0.0)) throw PositivityError("assemble_metric: g_wp <= 0");
  return build_metric(b);
}

template <typename Scalar>
Matrix3<Scalar> metric(const PointT<Scalar>& p) {
  return build_metric(blocks(p));
}

inline HermitianMatrix3 metric(const TotalSpacePoint& p) { return assemble_metric(blocks(p)); }

// Total volume of the polarized fiber; also the global scale of the metric.
inline double volume(const TotalSpacePoint& p) { return p.v(); }

// Metric divided by the fiber volume Im alpha. This is the scale-invariant
// normalization whose fiber restrictions are Kahler.
template <typename Scalar>
Matrix3<Scalar> normalized_metric(const PointT<Scalar>& p) {
  const Scalar two_i{Complex(0.0, 2.0)};
  const Scalar vol = (p.alpha - conj(p.alpha)) / two_i;
  Matrix3<Scalar> h = metric(p);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) h(j, k) = h(j, k) / vol;
  return h;
}

inline HermitianMatrix3 normalized_metric(const TotalSpacePoint& p) {
  return normalized_metric(p.coords());
}

// The closed-form fields as scalar-generic callables, for the differential
// operators that re-evaluate them on jets.
struct MetricField {
  template <typename Scalar>
  Matrix3<Scalar> operator()(const PointT<Scalar>& p) const {
    return metric(p);
  }
};

struct NormalizedMetricField {
  template <typename Scalar>
  Matrix3<Scalar> operator()(const PointT<Scalar>& p) const {
    return normalized_metric(p);
  }
};

}  // namespace ellmod
