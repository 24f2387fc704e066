#pragma once

#include <random>

#include "eqbeam/linalg.hpp"
#include "eqbeam/types.hpp"

namespace eqbeam::testing {

constexpr double kPi = 3.14159265358979323846;

/// Uniform point on the unit sphere.
inline Eigen::Vector3d random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::Vector3d v(normal(rng), normal(rng), normal(rng));
  while (v.norm() < 1e-6) v = {normal(rng), normal(rng), normal(rng)};
  return v / v.norm();
}

/// Uniform Bloch vector with |p| <= max_norm.
inline Eigen::Vector3d random_bloch(std::mt19937_64& rng,
                                    double max_norm = 1.0) {
  std::uniform_real_distribution<double> u(0.0, max_norm);
  return random_unit(rng) * u(rng);
}

/// Random Hermitian matrix with entries of order 1.
inline Matrix random_hermitian(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> normal;
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = Complex(normal(rng), normal(rng));
  return (a + a.adjoint()) / 2.0;
}

/// Random density matrix (PSD, unit trace).
inline Matrix random_density(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> normal;
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = Complex(normal(rng), normal(rng));
  Matrix m = a * a.adjoint();
  return m / m.trace();
}

/// |<a|b>| = 1 test: equality of unit vectors up to a global phase.
inline bool same_up_to_phase(const Vector& a, const Vector& b,
                             double tol = 1e-10) {
  return std::abs(std::abs((a.adjoint() * b)(0)) - 1.0) <= tol;
}

inline Matrix random_unitary(std::mt19937_64& rng, int dim) {
  Matrix a(dim, dim);
  std::normal_distribution<double> normal;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = Complex(normal(rng), normal(rng));
  const Eigen::HouseholderQR<Matrix> qr(a);
  return qr.householderQ();
}

}  // namespace eqbeam::testing
