#include "eqbeam/mode_matrix.hpp"

#include <cmath>

#include "eqbeam/linalg.hpp"

namespace eqbeam {

ModeMatrix::ModeMatrix(Matrix m, MatrixRole role)
    : mat_(std::move(m)), role_(role) {
  if (mat_.rows() != mat_.cols() || mat_.rows() < 1)
    throw DimensionMismatchError("mode matrix: must be square and non-empty");
  if (hermiticity_residual(mat_) > kHermTol)
    throw NotHermitianError("mode matrix: not Hermitian");
  if (min_eigenvalue(mat_) < -kEigTol)
    throw NotPositiveError("mode matrix: not positive semidefinite");
  if (std::abs(mat_.trace() - Complex(1, 0)) > kTraceTol)
    throw OutOfRangeError("mode matrix: trace must be 1");
}

double mixedness(const ModeMatrix& m) {
  return 1.0 - (m.mat() * m.mat()).trace().real();
}

double c_entropy(const ModeMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.mat(), Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index k = 0; k < m.dim(); ++k) {
    const double lambda = es.eigenvalues()[k];
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s;
}

}  // namespace eqbeam
