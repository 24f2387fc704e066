#pragma once

#include <vector>

#include "eqbeam/types.hpp"

namespace eqbeam {

/// Generator triple of a (2T+1)-dimensional SU(2) irreducible representation.
///
/// Basis convention: eigenvectors of t3 ordered by ascending eigenvalue
/// -T..+T, so that for integer T the basis index k corresponds to the OAM
/// mode LG_{0,l} with l = k - T. The ladder operators t1 +- i*t2 raise and
/// lower with the conventional positive matrix elements
/// sqrt(T(T+1) - m(m+-1)).
struct SU2Frame {
  SpinLabel label;
  Matrix t1, t2, t3;

  int dim() const { return label.dim(); }

  /// T . v (unnormalized generators contracted with a real 3-vector).
  Matrix dot(const Eigen::Vector3d& v) const {
    return v[0] * t1 + v[1] * t2 + v[2] * t3;
  }
};

enum class RotationSign { positive, negative };

SU2Frame make_generators(SpinLabel label);

/// e^{-i t3 phi} e^{-i t2 theta} e^{-i t3 psi} |T3 = +T>. psi only
/// contributes a global phase.
Vector coherent_state(const SU2Frame& frame, double theta, double phi,
                      double psi = 0.0);

/// exp(sign * i * (T.axis) * angle), computed by eigendecomposition.
Matrix wigner_rotation(const SU2Frame& frame, const UnitVector3& axis,
                       double angle, RotationSign sign);

/// e^{i scale H} for Hermitian H. Throws NotHermitianError when the
/// symmetry residual of H exceeds tolerance.
Matrix herm_exp(const Matrix& h, Complex scale = Complex(1, 0));

/// Frobenius norm of (2T+1)/(4pi) * \oint |n><n| dOmega - Identity,
/// evaluated with Gauss-Legendre nodes in cos(theta) crossed with a
/// uniform periodic grid in phi. Exact (up to roundoff) once the order
/// reaches the 2T+1 band limit; below it the residual is returned as-is.
double resolution_of_identity_residual(const SU2Frame& frame,
                                       int quadrature_order);

/// Product quadrature on the sphere: Gauss-Legendre in cos(theta),
/// uniform in phi. Sum of node_weight over all (i,j) equals 4pi.
struct SphereQuadrature {
  std::vector<double> theta;         // arccos of Gauss-Legendre nodes
  std::vector<double> theta_weight;  // Gauss-Legendre weights
  std::vector<double> phi;           // uniform grid on [0, 2pi)
  double phi_weight = 0.0;           // 2pi / phi.size()

  int n_theta() const { return static_cast<int>(theta.size()); }
  int n_phi() const { return static_cast<int>(phi.size()); }
  double node_weight(int i, int j) const {
    (void)j;
    return theta_weight[i] * phi_weight;
  }
};

SphereQuadrature sphere_quadrature(int order);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace eqbeam
