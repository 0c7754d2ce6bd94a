#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace ellmod {

using Complex = std::complex<double>;

// Dense matrix templated on the scalar so the closed-form metric can be
// evaluated on plain complex numbers or on derivative-carrying jets.
template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

// Coefficient matrix h_{j,k-bar} of a hermitian form, index order (z, alpha, s).
using HermitianMatrix3 = Matrix3<Complex>;

// J(l, j) = d(F_l)/d(z_j) of a holomorphic map, evaluated at the source point.
using ComplexJacobian3 = Matrix3<Complex>;

using Matrix2c = Eigen::Matrix2cd;

// Real coordinate order throughout: (x, y, Re alpha, Im alpha, sigma, t)
// where z = x + iy and s = sigma + it.
using RealMetric6 = Eigen::Matrix<double, 6, 6>;
using RealJacobian6 = Eigen::Matrix<double, 6, 6>;

// A coordinate left the allowed domain. Carries the name of the offending
// parameter so callers can report which input was bad.
class DomainError : public std::domain_error {
 public:
  DomainError(std::string parameter, const std::string& what)
      : std::domain_error(what), parameter_(std::move(parameter)) {}
  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

// Matrix fails a symmetry requirement (conjugate symmetry, real symmetry).
class SymmetryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A quantity that must be positive came out nonpositive.
class PositivityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A real-linear basis collapsed (the two generators became parallel).
class DegenerateBasisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid sampler or run configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Suite name not in the registry.
class UnknownSuiteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ellmod
