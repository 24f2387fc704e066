#pragma once

#include "eqbeam/types.hpp"

namespace eqbeam {

/// Whether a ModeMatrix stands for a quantum density matrix or for the
/// coherent-mode representation of a classical beam. The algebra is
/// identical; the tag records intent.
enum class MatrixRole { density, coherent_mode };

/// Hermitian, positive-semidefinite, unit-trace complex matrix.
/// Validated on construction: hermiticity residual <= 1e-10, eigenvalues
/// >= -1e-10, |trace - 1| <= 1e-10.
class ModeMatrix {
 public:
  explicit ModeMatrix(Matrix m, MatrixRole role = MatrixRole::coherent_mode);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Matrix& mat() const { return mat_; }
  MatrixRole role() const { return role_; }

  static constexpr double kHermTol = 1e-10;
  static constexpr double kEigTol = 1e-10;
  static constexpr double kTraceTol = 1e-10;

 private:
  Matrix mat_;
  MatrixRole role_;
};

/// 1 - Tr(M^2), in [0, 1 - 1/dim].
double mixedness(const ModeMatrix& m);

/// -sum_k lambda_k log(lambda_k) over eigenvalues, natural log,
/// 0 log 0 = 0.
double c_entropy(const ModeMatrix& m);

}  // namespace eqbeam
