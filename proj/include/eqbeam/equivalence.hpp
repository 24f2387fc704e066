#pragma once

#include <span>
#include <vector>

#include "eqbeam/mode_matrix.hpp"
#include "eqbeam/su2.hpp"
#include "eqbeam/types.hpp"

namespace eqbeam {

/// Q-function sampled on a product quadrature grid over the sphere.
/// values(i, j) is the density at (theta_i, phi_j) per steradian; the
/// weighted sum over the grid integrates to Tr(M) = 1.
struct QFunctionGrid {
  SphereQuadrature quad;
  Eigen::MatrixXd values;  // n_theta x n_phi

  double integral() const;
  double max_abs_diff(const QFunctionGrid& other) const;
};

/// F(n) = (2T+1)/(4pi) <n|M|n> over the quadrature grid of the given order.
QFunctionGrid q_function(const ModeMatrix& m, const SU2Frame& frame,
                         int quadrature_order);

/// (2T+1)-dimensional state with the same Q-function as the qubit state
/// (1/2)(1 + sigma.p): rho = (1/(2T+1))(1 + (T.p)/T).
ModeMatrix equivalent_state(const BlochVector& p, SpinLabel t);

/// Observable (3T/(T+1)) (T.m)/T together with, for T = 1, the three
/// projectors of its eigen-resolution (eigenvalues +3/2, -3/2, 0 in order).
struct ObservableResolution {
  Matrix op;
  std::vector<Matrix> projectors;  // size 3 when T == 1, else empty
};

ObservableResolution equivalent_observable(const UnitVector3& m, SpinLabel t);

/// Bloch parametrization of a 2 x (2T+1) two-degree-of-freedom matrix:
/// vectors p, q and the 3x3 correlation tensor t.
struct BipartiteBloch {
  BlochVector p;
  BlochVector q;
  Eigen::Matrix3d t;
};

/// (1/(2(2T+1)))[1 + sigma.p + That.q + t_ij sigma_i That_j], with both
/// factors in the ascending-m basis so the two-sphere Q-representation is
/// the bilinear closed form in (p, q, t). Throws NotPositiveError when
/// the parameters are unphysical.
ModeMatrix general_two_dof_state(const BipartiteBloch& b, SpinLabel t);

/// Werner family (1/(2(2T+1)))(1 - alpha sigma.That); in-range alpha is
/// [-T/(T+1), 1], outside of which positivity fails and OutOfRangeError
/// is thrown. Separable iff |alpha| <= T/(T+1). The qubit factor carries
/// the |0) = |H)-first Pauli convention shared with the Bell beams, the
/// (2T+1) factor the ascending-m generator basis; this is the concrete
/// matrix the six-member separable expansion reproduces at alpha = 1/2,
/// T = 1.
ModeMatrix werner_state(double alpha, SpinLabel t);

/// Smallest half-integer T whose Werner family is separable at this alpha,
/// i.e. smallest T with T/(T+1) >= |alpha|. Throws UnboundedError at
/// |alpha| = 1 (no finite-dimensional separable equivalent exists).
SpinLabel werner_t_min(double alpha);

/// Transpose on the second tensor factor of a dim_a x dim_b composite.
Matrix partial_transpose(const Matrix& m, int dim_a);
double ppt_min_eig(const ModeMatrix& m, int dim_a);

/// One product-projector member of a separable mixture.
struct SeparableEnsemble {
  struct Member {
    double weight;
    Vector left;   // dim 2
    Vector right;  // dim 2T+1
  };
  std::vector<Member> members;

  ModeMatrix assemble() const;
};

/// The explicit six-member equal-weight separable expansion of
/// werner_state(1/2, T=1) over polarisation x OAM product projectors.
SeparableEnsemble separable_decomposition_t1();

/// Time-averaged 2x2 polarisation matrix of sampled field components,
/// normalized by the total intensity.
ModeMatrix polarization_matrix_from_samples(std::span<const Complex> ex,
                                            std::span<const Complex> ey);

/// sqrt(1 - 4 det J) of a 2x2 mode matrix.
double degree_of_polarization(const ModeMatrix& j);

/// True iff the two matrices share the same Q-representation: grids on a
/// common quadrature of order >= 2 max(T1,T2)+1 agree pointwise within tol.
bool equivalence_check(const ModeMatrix& m1, SpinLabel t1,
                       const ModeMatrix& m2, SpinLabel t2, double tol);

}  // namespace eqbeam
