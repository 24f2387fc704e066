#include "eqbeam/su2.hpp"

#include <cmath>

#include "eqbeam/linalg.hpp"

namespace eqbeam {

SU2Frame make_generators(SpinLabel label) {
  const int dim = label.dim();
  const double t = label.value();

  Matrix raising = Matrix::Zero(dim, dim);
  for (int k = 0; k + 1 < dim; ++k) {
    const double m = -t + k;
    raising(k + 1, k) = std::sqrt(t * (t + 1) - m * (m + 1));
  }
  const Matrix lowering = raising.adjoint();

  SU2Frame frame{label, Matrix(), Matrix(), Matrix()};
  frame.t1 = (raising + lowering) / 2.0;
  frame.t2 = (raising - lowering) / Complex(0, 2);
  frame.t3 = Matrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) frame.t3(k, k) = -t + k;
  return frame;
}

Matrix herm_exp(const Matrix& h, Complex scale) {
  if (h.rows() != h.cols())
    throw NotHermitianError("herm_exp: matrix must be square");
  const double tol = 1e-10 * std::max(1.0, h.norm());
  if (hermiticity_residual(h) > tol)
    throw NotHermitianError("herm_exp: matrix is not Hermitian");

  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const auto& evals = es.eigenvalues();
  const Matrix& v = es.eigenvectors();
  Vector phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k)
    phases[k] = std::exp(Complex(0, 1) * scale * evals[k]);
  return v * phases.asDiagonal() * v.adjoint();
}

Vector coherent_state(const SU2Frame& frame, double theta, double phi,
                      double psi) {
  const int dim = frame.dim();
  const double t = frame.label.value();

  Vector state = Vector::Zero(dim);
  state[dim - 1] = std::exp(Complex(0, -t * psi));  // e^{-i t3 psi} |T3=+T>
  state = herm_exp(frame.t2, Complex(-theta, 0)) * state;
  for (int k = 0; k < dim; ++k)  // t3 is diagonal; apply phases directly
    state[k] *= std::exp(Complex(0, -(-t + k) * phi));
  return state;
}

Matrix wigner_rotation(const SU2Frame& frame, const UnitVector3& axis,
                       double angle, RotationSign sign) {
  const double s = sign == RotationSign::positive ? angle : -angle;
  return herm_exp(frame.dot(axis.vec()), Complex(s, 0));
}

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  if (n < 1) throw OutOfRangeError("gauss_legendre: order must be >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const double pi = std::acos(-1.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence up to degree n, with derivative
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

SphereQuadrature sphere_quadrature(int order) {
  if (order < 1) throw OutOfRangeError("sphere_quadrature: order must be >= 1");
  SphereQuadrature q;
  std::vector<double> x;
  gauss_legendre(order, x, q.theta_weight);
  q.theta.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) q.theta[i] = std::acos(x[i]);

  const double two_pi = 2.0 * std::acos(-1.0);
  q.phi.resize(order);
  for (int j = 0; j < order; ++j) q.phi[j] = two_pi * j / order;
  q.phi_weight = two_pi / order;
  return q;
}

double resolution_of_identity_residual(const SU2Frame& frame,
                                       int quadrature_order) {
  const int dim = frame.dim();
  const SphereQuadrature quad = sphere_quadrature(quadrature_order);
  Matrix acc = Matrix::Zero(dim, dim);
  for (int i = 0; i < quad.n_theta(); ++i) {
    // phi rotation is a diagonal phase of the theta-rotated state, so the
    // t2 exponential is shared across the phi ring
    const Vector base = coherent_state(frame, quad.theta[i], 0.0);
    for (int j = 0; j < quad.n_phi(); ++j) {
      Vector state = base;
      const double t = frame.label.value();
      for (int k = 0; k < dim; ++k)
        state[k] *= std::exp(Complex(0, -(-t + k) * quad.phi[j]));
      acc.noalias() += quad.node_weight(i, j) * (state * state.adjoint());
    }
  }
  const double pi = std::acos(-1.0);
  acc *= dim / (4.0 * pi);
  return (acc - Matrix::Identity(dim, dim)).norm();
}

}  // namespace eqbeam
