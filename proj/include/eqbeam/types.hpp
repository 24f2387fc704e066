#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace eqbeam {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitianError : Error {
  using Error::Error;
};
struct NotPositiveError : Error {
  using Error::Error;
};
struct DimensionMismatchError : Error {
  using Error::Error;
};
struct LengthMismatchError : Error {
  using Error::Error;
};
struct OutOfRangeError : Error {
  using Error::Error;
};
struct UnboundedError : Error {
  using Error::Error;
};
struct SingularityError : Error {
  using Error::Error;
};
struct ZeroWeightError : Error {
  using Error::Error;
};
struct ZeroIntensityError : Error {
  using Error::Error;
};
struct EmptyBatchError : Error {
  using Error::Error;
};
/// Raised by file readers; messages carry the offending row/path.
struct ParseError : Error {
  using Error::Error;
};

/// Spin label T of an SU(2) irreducible representation, stored as the
/// integer 2T so that half-integers compare exactly.
class SpinLabel {
 public:
  explicit SpinLabel(int twice_t) : twice_t_(twice_t) {
    if (twice_t < 0) throw OutOfRangeError("spin label: 2T must be >= 0");
  }

  /// Accepts 0.5, 1, 1.5, ... as written on a command line.
  static SpinLabel from_value(double t) {
    const double twice = 2.0 * t;
    const int rounded = static_cast<int>(std::lround(twice));
    if (std::abs(twice - rounded) > 1e-9 || rounded < 0)
      throw OutOfRangeError("spin label: T must be a non-negative half-integer");
    return SpinLabel(rounded);
  }

  int twice() const { return twice_t_; }
  double value() const { return twice_t_ / 2.0; }
  int dim() const { return twice_t_ + 1; }
  bool is_integer() const { return twice_t_ % 2 == 0; }

  friend bool operator==(const SpinLabel&, const SpinLabel&) = default;

 private:
  int twice_t_;
};

/// Unit vector on the sphere, validated to |n| = 1 within 1e-12.
class UnitVector3 {
 public:
  UnitVector3(double n1, double n2, double n3) : n_(n1, n2, n3) {
    if (std::abs(n_.norm() - 1.0) > 1e-12)
      throw OutOfRangeError("unit vector: |n| must be 1");
  }

  static UnitVector3 from_spherical(double theta, double phi) {
    return UnitVector3(std::sin(theta) * std::cos(phi),
                       std::sin(theta) * std::sin(phi), std::cos(theta));
  }

  static UnitVector3 e1() { return UnitVector3(1, 0, 0); }
  static UnitVector3 e2() { return UnitVector3(0, 1, 0); }
  static UnitVector3 e3() { return UnitVector3(0, 0, 1); }

  const Eigen::Vector3d& vec() const { return n_; }
  double operator[](int i) const { return n_[i]; }

 private:
  Eigen::Vector3d n_;
};

/// Bloch vector of a 2x2 mode matrix; |p| <= 1 within 1e-12.
class BlochVector {
 public:
  BlochVector(double p1, double p2, double p3) : p_(p1, p2, p3) {
    if (p_.norm() > 1.0 + 1e-12)
      throw OutOfRangeError("bloch vector: |p| must be <= 1");
  }
  explicit BlochVector(const Eigen::Vector3d& p) : BlochVector(p[0], p[1], p[2]) {}

  const Eigen::Vector3d& vec() const { return p_; }
  double operator[](int i) const { return p_[i]; }
  double norm() const { return p_.norm(); }

 private:
  Eigen::Vector3d p_;
};

}  // namespace eqbeam
