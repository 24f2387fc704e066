#pragma once

#include <array>

#include "eqbeam/types.hpp"

namespace eqbeam {

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline double hermiticity_residual(const Matrix& m) {
  return (m - m.adjoint()).norm();
}

inline bool is_hermitian(const Matrix& m, double tol = 1e-10) {
  return m.rows() == m.cols() && hermiticity_residual(m) <= tol;
}

inline double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

inline std::array<Matrix, 3> pauli_matrices() {
  Matrix s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, Complex(0, -1), Complex(0, 1), 0;
  s3 << 1, 0, 0, -1;
  return {s1, s2, s3};
}

}  // namespace eqbeam
