#include "eqbeam/equivalence.hpp"

#include <algorithm>
#include <cmath>

#include "eqbeam/linalg.hpp"

namespace eqbeam {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double QFunctionGrid::integral() const {
  double sum = 0.0;
  for (int i = 0; i < quad.n_theta(); ++i)
    for (int j = 0; j < quad.n_phi(); ++j)
      sum += quad.node_weight(i, j) * values(i, j);
  return sum;
}

double QFunctionGrid::max_abs_diff(const QFunctionGrid& other) const {
  if (values.rows() != other.values.rows() ||
      values.cols() != other.values.cols())
    throw DimensionMismatchError("q-function grids differ in size");
  return (values - other.values).cwiseAbs().maxCoeff();
}

QFunctionGrid q_function(const ModeMatrix& m, const SU2Frame& frame,
                         int quadrature_order) {
  if (m.dim() != frame.dim())
    throw DimensionMismatchError("q_function: matrix and frame dimensions differ");

  QFunctionGrid grid;
  grid.quad = sphere_quadrature(quadrature_order);
  grid.values.resize(grid.quad.n_theta(), grid.quad.n_phi());
  const double t = frame.label.value();
  const double scale = frame.dim() / (4.0 * kPi);
  for (int i = 0; i < grid.quad.n_theta(); ++i) {
    const Vector base = coherent_state(frame, grid.quad.theta[i], 0.0);
    for (int j = 0; j < grid.quad.n_phi(); ++j) {
      Vector state = base;
      for (int k = 0; k < frame.dim(); ++k)
        state[k] *= std::exp(Complex(0, -(-t + k) * grid.quad.phi[j]));
      grid.values(i, j) = scale * (state.adjoint() * m.mat() * state)(0).real();
    }
  }
  return grid;
}

ModeMatrix equivalent_state(const BlochVector& p, SpinLabel t) {
  const SU2Frame frame = make_generators(t);
  const int dim = t.dim();
  const Matrix m =
      (Matrix::Identity(dim, dim) + frame.dot(p.vec()) / t.value()) / dim;
  return ModeMatrix(m);
}

ObservableResolution equivalent_observable(const UnitVector3& m, SpinLabel t) {
  const SU2Frame frame = make_generators(t);
  const double tv = t.value();
  const Matrix tm = frame.dot(m.vec());

  ObservableResolution out;
  out.op = (3.0 * tv / (tv + 1.0)) * tm / tv;
  if (t.twice() == 2) {
    const Matrix id = Matrix::Identity(3, 3);
    out.projectors = {0.5 * tm * (tm + id), 0.5 * tm * (tm - id),
                      id - tm * tm};
  }
  return out;
}

ModeMatrix general_two_dof_state(const BipartiteBloch& b, SpinLabel t) {
  // both factors follow the ascending-m basis convention of make_generators,
  // so the Q-representation is the bilinear closed form in (p, q, t)
  const SU2Frame half = make_generators(SpinLabel(1));
  const std::array<Matrix, 3> sigma = {2.0 * half.t1, 2.0 * half.t2,
                                       2.0 * half.t3};
  const SU2Frame frame = make_generators(t);
  const std::array<Matrix, 3> that = {frame.t1 / t.value(),
                                      frame.t2 / t.value(),
                                      frame.t3 / t.value()};
  const int dim_b = t.dim();
  const Matrix id2 = Matrix::Identity(2, 2);
  const Matrix idb = Matrix::Identity(dim_b, dim_b);

  Matrix m = kron(id2, idb);
  for (int i = 0; i < 3; ++i) {
    m += b.p[i] * kron(sigma[i], idb);
    m += b.q[i] * kron(id2, that[i]);
    for (int j = 0; j < 3; ++j) m += b.t(i, j) * kron(sigma[i], that[j]);
  }
  m /= 2.0 * dim_b;
  return ModeMatrix(m);  // PSD check happens here
}

ModeMatrix werner_state(double alpha, SpinLabel t) {
  const double tv = t.value();
  if (tv <= 0.0) throw OutOfRangeError("werner_state: T must be positive");
  if (alpha > 1.0 + 1e-12 || alpha < -tv / (tv + 1.0) - 1e-12)
    throw OutOfRangeError("werner_state: alpha outside [-T/(T+1), 1]");

  const auto sigma = pauli_matrices();
  const SU2Frame frame = make_generators(t);
  const std::array<const Matrix*, 3> gen = {&frame.t1, &frame.t2, &frame.t3};
  const int dim_b = t.dim();
  Matrix m = Matrix::Identity(2 * dim_b, 2 * dim_b);
  for (int i = 0; i < 3; ++i) m -= (alpha / tv) * kron(sigma[i], *gen[i]);
  m /= 2.0 * dim_b;
  return ModeMatrix(m);
}

SpinLabel werner_t_min(double alpha) {
  const double a = std::abs(alpha);
  if (a >= 1.0)
    throw UnboundedError(
        "werner_t_min: at |alpha| = 1 the separable equivalent needs an "
        "infinite-dimensional space");
  // smallest half-integer T with T >= a/(1-a)
  const double ratio = a / (1.0 - a);
  const int twice = std::max(1, static_cast<int>(std::ceil(2.0 * ratio - 1e-9)));
  return SpinLabel(twice);
}

Matrix partial_transpose(const Matrix& m, int dim_a) {
  if (dim_a < 1 || m.rows() != m.cols() || m.rows() % dim_a != 0)
    throw DimensionMismatchError("partial_transpose: bad factor dimensions");
  const int dim_b = static_cast<int>(m.rows()) / dim_a;
  Matrix out(m.rows(), m.cols());
  for (int a = 0; a < dim_a; ++a)
    for (int ap = 0; ap < dim_a; ++ap)
      out.block(a * dim_b, ap * dim_b, dim_b, dim_b) =
          m.block(a * dim_b, ap * dim_b, dim_b, dim_b).transpose();
  return out;
}

double ppt_min_eig(const ModeMatrix& m, int dim_a) {
  return min_eigenvalue(partial_transpose(m.mat(), dim_a));
}

ModeMatrix SeparableEnsemble::assemble() const {
  if (members.empty()) throw EmptyBatchError("separable ensemble is empty");
  const Eigen::Index rows = members[0].left.size() * members[0].right.size();
  Matrix m = Matrix::Zero(rows, rows);
  for (const auto& member : members) {
    const Matrix lp = member.left * member.left.adjoint();
    const Matrix rp = member.right * member.right.adjoint();
    m += member.weight * kron(lp, rp);
  }
  return ModeMatrix(m);
}

SeparableEnsemble separable_decomposition_t1() {
  const double rt2 = std::sqrt(2.0);
  const Complex i1(0, 1);

  Vector h(2), v(2), plus(2), minus(2), circ_r(2), circ_l(2);
  h << 1, 0;
  v << 0, 1;
  plus << 1 / rt2, 1 / rt2;
  minus << 1 / rt2, -1 / rt2;
  circ_r << 1 / rt2, i1 / rt2;
  circ_l << 1 / rt2, -i1 / rt2;

  Vector lg_m1(3), lg_0(3), lg_p1(3);
  lg_m1 << 1, 0, 0;
  lg_0 << 0, 1, 0;
  lg_p1 << 0, 0, 1;

  const Vector psi1 = lg_p1;
  const Vector psi2 = lg_m1;
  const Vector psi3p = 0.5 * lg_m1 + lg_0 / rt2 + 0.5 * lg_p1;
  const Vector psi3m = 0.5 * lg_m1 - lg_0 / rt2 + 0.5 * lg_p1;
  const Vector psi4p = 0.5 * lg_m1 + i1 * lg_0 / rt2 - 0.5 * lg_p1;
  const Vector psi4m = 0.5 * lg_m1 - i1 * lg_0 / rt2 - 0.5 * lg_p1;

  SeparableEnsemble ensemble;
  const double w = 1.0 / 6.0;
  ensemble.members = {{w, v, psi1},      {w, h, psi2},     {w, minus, psi3p},
                      {w, plus, psi3m},  {w, circ_r, psi4p},
                      {w, circ_l, psi4m}};
  return ensemble;
}

ModeMatrix polarization_matrix_from_samples(std::span<const Complex> ex,
                                            std::span<const Complex> ey) {
  if (ex.size() != ey.size())
    throw LengthMismatchError("polarization matrix: sample series differ in length");
  if (ex.empty())
    throw LengthMismatchError("polarization matrix: empty sample series");

  Matrix j = Matrix::Zero(2, 2);
  for (std::size_t k = 0; k < ex.size(); ++k) {
    j(0, 0) += std::conj(ex[k]) * ex[k];
    j(0, 1) += std::conj(ex[k]) * ey[k];
    j(1, 0) += std::conj(ey[k]) * ex[k];
    j(1, 1) += std::conj(ey[k]) * ey[k];
  }
  const double intensity = (j(0, 0) + j(1, 1)).real();
  if (intensity <= 0.0)
    throw ZeroIntensityError("polarization matrix: total intensity is zero");
  return ModeMatrix(j / intensity);
}

double degree_of_polarization(const ModeMatrix& j) {
  if (j.dim() != 2)
    throw DimensionMismatchError("degree_of_polarization: needs a 2x2 matrix");
  const double det = j.mat().determinant().real();
  return std::sqrt(std::max(0.0, 1.0 - 4.0 * det));
}

bool equivalence_check(const ModeMatrix& m1, SpinLabel t1,
                       const ModeMatrix& m2, SpinLabel t2, double tol) {
  const int order = std::max(t1.twice(), t2.twice()) + 1;  // 2 max(T) + 1
  const SU2Frame f1 = make_generators(t1);
  const SU2Frame f2 = make_generators(t2);
  const QFunctionGrid g1 = q_function(m1, f1, order);
  const QFunctionGrid g2 = q_function(m2, f2, order);
  return g1.max_abs_diff(g2) <= tol;
}

}  // namespace eqbeam
