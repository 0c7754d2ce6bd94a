#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellmod/calculus.hpp"
#include "ellmod/geometry.hpp"
#include "ellmod/metric.hpp"
#include "ellmod/sampler.hpp"
#include "ellmod/symmetries.hpp"

#include <cmath>

using namespace ellmod;

namespace {

const Complex I(0.0, 1.0);

double point_distance(const TotalSpacePoint& a, const TotalSpacePoint& b) {
  return std::max({std::abs(a.z() - b.z()), std::abs(a.alpha() - b.alpha()),
                   std::abs(a.s() - b.s())});
}

// Holomorphic Jacobian extracted from jets, as an independent route: entry
// (l, j) is the unbarred Wirtinger derivative of output l by coordinate j.
template <typename Apply>
ComplexJacobian3 jacobian_from_jets(const Apply& apply, const TotalSpacePoint& p,
                                    double* antiholomorphic_leak = nullptr) {
  const PointT<Jet6> q = apply(seed_jets(p));
  const Jet6* out[3] = {&q.z, &q.alpha, &q.s};
  ComplexJacobian3 J;
  double leak = 0.0;
  for (int l = 0; l < 3; ++l)
    for (int j = 0; j < 3; ++j) {
      J(l, j) = wirtinger(*out[l], static_cast<Coord>(j), false);
      leak = std::max(leak, std::abs(wirtinger(*out[l], static_cast<Coord>(j), true)));
    }
  if (antiholomorphic_leak != nullptr) *antiholomorphic_leak = leak;
  return J;
}

}  // namespace

TEST_CASE("deck transformations shift the fiber coordinate by the lattice") {
  const TotalSpacePoint p = make_point(I, I, 2.0 * I);
  const TotalSpacePoint q = deck_apply(DeckElement{2, 3}, p);
  CHECK(q.z() == Complex(2.0, 7.0));
  CHECK(q.alpha() == p.alpha());
  CHECK(q.s() == p.s());

  const ComplexJacobian3 J = deck_jacobian(DeckElement{2, 3});
  CHECK(J(0, 0) == Complex(1.0));
  CHECK(J(0, 2) == Complex(3.0));
  CHECK(J(1, 1) == Complex(1.0));
  CHECK(J(2, 2) == Complex(1.0));
  CHECK(J(0, 1) == Complex(0.0));
}

TEST_CASE("deck elements compose additively") {
  SamplerConfig cfg;
  cfg.seed = 41;
  cfg.samples = 100;
  SplitMix64 rng(7);
  for (const TotalSpacePoint& p : sample_points(cfg)) {
    const DeckElement g1{rng.uniform_int(-5, 5), rng.uniform_int(-5, 5)};
    const DeckElement g2{rng.uniform_int(-5, 5), rng.uniform_int(-5, 5)};
    const TotalSpacePoint lhs = deck_apply(g1 * g2, p);
    const TotalSpacePoint rhs = deck_apply(g1, deck_apply(g2, p));
    CHECK(point_distance(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("deck pullback reproduces the metric") {
  SamplerConfig cfg;
  cfg.seed = 42;
  cfg.samples = 1000;
  SplitMix64 rng(8);
  double worst = 0.0;
  for (const TotalSpacePoint& p : sample_points(cfg)) {
    const DeckElement g{rng.uniform_int(-5, 5), rng.uniform_int(-5, 5)};
    const TotalSpacePoint q = deck_apply(g, p);
    const HermitianMatrix3 pulled = pullback_holomorphic(metric(q), deck_jacobian(g));
    worst = std::max(worst, (pulled - metric(p)).cwiseAbs().maxCoeff());
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("modular generators act by Mobius transformations") {
  const TotalSpacePoint p = make_point(I, I, 2.0 * I);

  const TotalSpacePoint tp = modular_apply(modular_T(), p);
  CHECK(tp.z() == p.z());
  CHECK(tp.alpha() == p.alpha());
  CHECK(tp.s() == Complex(1.0, 2.0));

  const TotalSpacePoint sp = modular_apply(modular_S(), p);
  CHECK(std::abs(sp.z() - Complex(0.5, 0.0)) <= 1e-16);
  CHECK(sp.alpha() == p.alpha());
  CHECK(std::abs(sp.s() - Complex(0.0, 0.5)) <= 1e-16);

  CHECK(modular_T().det() == 1);
  CHECK(modular_S().det() == 1);
  CHECK((modular_S() * modular_S()).a == -1);  // S^2 = -id in SL(2,Z)
}

TEST_CASE("modular_jacobian entries at the inversion") {
  const TotalSpacePoint p = make_point(I, I, 2.0 * I);
  const ComplexJacobian3 J = modular_jacobian(modular_S(), p);
  CHECK(std::abs(J(0, 0) - Complex(0.0, -0.5)) <= 1e-16);
  CHECK(std::abs(J(0, 2) - Complex(0.0, 0.25)) <= 1e-16);
  CHECK(J(1, 1) == Complex(1.0));
  CHECK(std::abs(J(2, 2) - Complex(-0.25, 0.0)) <= 1e-16);
  CHECK(J(1, 0) == Complex(0.0));
  CHECK(J(2, 0) == Complex(0.0));
}

TEST_CASE("modular_jacobian agrees with jet differentiation and has no antiholomorphic part") {
  SamplerConfig cfg;
  cfg.seed = 43;
  cfg.samples = 100;
  SplitMix64 rng(9);
  for (const TotalSpacePoint& p : sample_points(cfg)) {
    ModularElement g;
    const std::int64_t len = rng.uniform_int(1, 4);
    for (std::int64_t l = 0; l < len; ++l)
      g = g * (rng.uniform_int(0, 1) == 0 ? modular_T() : modular_S());
    double leak = 0.0;
    const ComplexJacobian3 from_jets = jacobian_from_jets(
        [&g](const PointT<Jet6>& q) { return modular_apply(g, q); }, p, &leak);
    CHECK((from_jets - modular_jacobian(g, p)).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(leak <= 1e-12);
  }
}

TEST_CASE("modular action composes like matrix multiplication") {
  SamplerConfig cfg;
  cfg.seed = 44;
  cfg.samples = 200;
  SplitMix64 rng(10);
  for (const TotalSpacePoint& p : sample_points(cfg)) {
    ModularElement g1, g2;
    for (int l = 0; l < 2; ++l) g1 = g1 * (rng.uniform_int(0, 1) == 0 ? modular_T() : modular_S());
    for (int l = 0; l < 2; ++l) g2 = g2 * (rng.uniform_int(0, 1) == 0 ? modular_T() : modular_S());
    const TotalSpacePoint lhs = modular_apply(g1 * g2, p);
    const TotalSpacePoint rhs = modular_apply(g1, modular_apply(g2, p));
    CHECK(point_distance(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("modular pullback reproduces the metric for generators and short words") {
  SamplerConfig cfg;
  cfg.seed = 45;
  cfg.samples = 1000;
  SplitMix64 rng(11);
  std::vector<ModularElement> elements = {modular_T(), modular_S()};
  for (int k = 0; k < 5; ++k) {
    ModularElement w;
    const std::int64_t len = rng.uniform_int(1, 4);
    for (std::int64_t l = 0; l < len; ++l)
      w = w * (rng.uniform_int(0, 1) == 0 ? modular_T() : modular_S());
    elements.push_back(w);
  }
  double worst = 0.0;
  for (const TotalSpacePoint& p : sample_points(cfg)) {
    const HermitianMatrix3 h = metric(p);
    for (const ModularElement& g : elements) {
      const TotalSpacePoint q = modular_apply(g, p);
      const HermitianMatrix3 pulled = pullback_holomorphic(metric(q), modular_jacobian(g, p));
      worst = std::max(worst, (pulled - h).cwiseAbs().maxCoeff());
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("projections read the two parameters and are invariant as required") {
  const TotalSpacePoint p = make_point(I, Complex(1.0, 2.0), Complex(3.0, 4.0));
  CHECK(nu_projection(p) == Complex(3.0, 4.0));
  CHECK(eta_projection(p) == Complex(1.0, 2.0));
  const TotalSpacePoint q = deck_apply(DeckElement{5, -3}, p);
  CHECK(nu_projection(q) == nu_projection(p));
  CHECK(eta_projection(q) == eta_projection(p));
  const TotalSpacePoint r = modular_apply(modular_T(), p);
  CHECK(eta_projection(r) == eta_projection(p));
}

TEST_CASE("real_linear_L fixes 1 and carries s to alpha") {
  const RealLinearMap id = real_linear_L(I, I);
  CHECK(id.matrix() == Eigen::Matrix2d::Identity());

  const RealLinearMap stretch = real_linear_L(2.0 * I, I);
  CHECK(stretch(Complex(1.0, 0.0)) == Complex(1.0, 0.0));
  CHECK(stretch(I) == 2.0 * I);

  SamplerConfig cfg;
  cfg.seed = 46;
  cfg.samples = 200;
  for (const TotalSpacePoint& p : sample_points(cfg)) {
    const RealLinearMap L = real_linear_L(p.alpha(), p.s());
    CHECK(std::abs(L(Complex(1.0, 0.0)) - Complex(1.0, 0.0)) == 0.0);
    CHECK(std::abs(L(p.s()) - p.alpha()) <= 1e-13 * (1.0 + std::abs(p.alpha())));
    // orientation preserving: determinant is the ratio of the two heights
    CHECK(L.det() > 0.0);
  }

  CHECK_THROWS_AS(real_linear_L(I, Complex(2.0, 0.0)), DegenerateBasisError);
}

TEST_CASE("mirror_map swaps the parameters and transports the fiber coordinate") {
  // alpha = s is a fixed locus
  const Complex s(1.0, 1.0);
  const TotalSpacePoint fixed = make_point(Complex(0.75, 0.5), s, s);
  const TotalSpacePoint fixed_img = mirror_map(fixed);
  CHECK(point_distance(fixed, fixed_img) <= 1e-15);

  // z = i is the lattice point 0 + (1/2) * 2i, carried to 0 + (1/2) * alpha
  const TotalSpacePoint p = make_point(I, I, 2.0 * I);
  const TotalSpacePoint q = mirror_map(p);
  CHECK(std::abs(q.z() - Complex(0.0, 0.5)) <= 1e-16);
  CHECK(q.alpha() == 2.0 * I);
  CHECK(q.s() == I);
}

TEST_CASE("mirror_map agrees with the real-linear lattice identification") {
  SamplerConfig cfg;
  cfg.seed = 47;
  cfg.samples = 300;
  for (const TotalSpacePoint& p : sample_points(cfg)) {
    const RealLinearMap L = real_linear_L(p.alpha(), p.s());
    const TotalSpacePoint q = mirror_map(p);
    CHECK(std::abs(q.z() - L(p.z())) <= 1e-12 * (1.0 + std::abs(q.z())));
  }
}

TEST_CASE("mirror_map is an involution that exchanges the fibrations exactly") {
  SamplerConfig cfg;
  cfg.seed = 48;
  cfg.samples = 1000;
  double worst = 0.0;
  for (const TotalSpacePoint& p : sample_points(cfg)) {
    const TotalSpacePoint q = mirror_map(p);
    // slot copies: bitwise equal, no tolerance
    CHECK(nu_projection(q) == eta_projection(p));
    CHECK(eta_projection(q) == nu_projection(p));
    worst = std::max(worst, point_distance(mirror_map(q), p));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("mirror jacobian at the square-lattice center is the block swap") {
  const TotalSpacePoint p = make_point(0.0, I, I);
  const RealJacobian6 J = mirror_jacobian_real(p);
  RealJacobian6 expected = RealJacobian6::Zero();
  expected.block<2, 2>(0, 0) = Eigen::Matrix2d::Identity();  // fiber fixed here
  expected.block<2, 2>(2, 4) = Eigen::Matrix2d::Identity();  // alpha' = s
  expected.block<2, 2>(4, 2) = Eigen::Matrix2d::Identity();  // s' = alpha
  CHECK((J - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("mirror jacobian matches finite differences") {
  const TotalSpacePoint p = make_point(Complex(0.3, 0.4), Complex(0.5, 1.25), Complex(-0.75, 2.0));
  const RealJacobian6 J = mirror_jacobian_real(p);
  const double step = 1e-6;
  std::array<double, 6> c = {p.x(), p.y(), p.alpha().real(), p.v(), p.sigma(), p.t()};
  for (int col = 0; col < 6; ++col) {
    auto image = [&](double delta) {
      std::array<double, 6> q = c;
      q[col] += delta;
      const Point m = mirror_map(
          Point{Complex(q[0], q[1]), Complex(q[2], q[3]), Complex(q[4], q[5])});
      return std::array<double, 6>{m.z.real(), m.z.imag(), m.alpha.real(),
                                   m.alpha.imag(), m.s.real(), m.s.imag()};
    };
    const auto up = image(step);
    const auto dn = image(-step);
    for (int row = 0; row < 6; ++row) {
      const double fd = (up[row] - dn[row]) / (2.0 * step);
      CHECK(std::abs(J(row, col) - fd) <= 1e-6 * (1.0 + std::abs(J(row, col))));
    }
  }
}

TEST_CASE("mirror pullback of the normalized metric: parameter blocks swap, fiber block cannot") {
  // The parameter 2x2 blocks exchange perfectly under the mirror. The fiber
  // block however transports the flat metric of conformal structure alpha
  // onto the fiber of conformal structure s; flat tori of distinct conformal
  // structure are never isometric, so away from alpha = s the pullback must
  // disagree. This pins the exact residual at a clean split point.
  const TotalSpacePoint p = make_point(0.0, 2.0 * I, I);
  const TotalSpacePoint q = mirror_map(p);
  CHECK(q.z() == Complex(0.0, 0.0));
  CHECK(q.alpha() == I);
  CHECK(q.s() == 2.0 * I);

  const RealMetric6 g_src = to_real_metric(normalized_metric(p));
  RealMetric6 expected_src = RealMetric6::Zero();
  expected_src.diagonal() << 1.0, 1.0, 0.0625, 0.0625, 0.25, 0.25;
  CHECK((g_src - expected_src).cwiseAbs().maxCoeff() <= 1e-15);

  const RealMetric6 g_img = to_real_metric(normalized_metric(q));
  RealMetric6 expected_img = RealMetric6::Zero();
  expected_img.diagonal() << 0.5, 0.5, 0.25, 0.25, 0.0625, 0.0625;
  CHECK((g_img - expected_img).cwiseAbs().maxCoeff() <= 1e-15);

  const RealMetric6 pulled = pullback_real(g_img, mirror_jacobian_real(p));
  const RealMetric6 residual = pulled - g_src;
  // parameter blocks cancel exactly
  CHECK(residual.block<4, 4>(2, 2).cwiseAbs().maxCoeff() <= 1e-15);
  // fiber block: pullback is diag(1/2, 2) against diag(1, 1)
  CHECK(std::abs(residual(0, 0) - (-0.5)) <= 1e-15);
  CHECK(std::abs(residual(1, 1) - 1.0) <= 1e-15);
}

TEST_CASE("the mirror does not commute with the modular inversion") {
  SamplerConfig cfg;
  cfg.seed = 49;
  cfg.samples = 100;
  double worst = 0.0;
  for (const TotalSpacePoint& p : sample_points(cfg)) {
    const TotalSpacePoint lhs = mirror_map(modular_apply(modular_S(), p));
    const TotalSpacePoint rhs = modular_apply(modular_S(), mirror_map(p));
    worst = std::max(worst, point_distance(lhs, rhs));
  }
  CHECK(worst > 1e-3);
}
