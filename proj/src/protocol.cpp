#include "eqbeam/protocol.hpp"

#include <cmath>

#include "eqbeam/equivalence.hpp"
#include "eqbeam/linalg.hpp"

namespace eqbeam {

BellBeam bell_beam(int index) {
  const double rt2 = std::sqrt(2.0);
  Vector ket = Vector::Zero(4);
  // composite index = 2*path + polarisation, |H) = |0), |V) = |1)
  switch (index) {
    case 1:  // (|0)|V) - |1)|H))/sqrt2
      ket[1] = 1 / rt2;
      ket[2] = -1 / rt2;
      break;
    case 2:  // (|0)|H) - |1)|V))/sqrt2
      ket[0] = 1 / rt2;
      ket[3] = -1 / rt2;
      break;
    case 3:  // (|0)|H) + |1)|V))/sqrt2
      ket[0] = 1 / rt2;
      ket[3] = 1 / rt2;
      break;
    case 4:  // (|0)|V) + |1)|H))/sqrt2
      ket[1] = 1 / rt2;
      ket[2] = 1 / rt2;
      break;
    default:
      throw OutOfRangeError("bell_beam: index must be in 1..4");
  }
  return {index, ket};
}

std::array<BellBeam, 4> all_bell_beams() {
  return {bell_beam(1), bell_beam(2), bell_beam(3), bell_beam(4)};
}

ModeMatrix build_channel(double alpha, SpinLabel t) {
  return werner_state(alpha, t);
}

TripartiteState make_tripartite(const BlochVector& p, double alpha,
                                SpinLabel t) {
  const auto sigma = pauli_matrices();
  Matrix ja = Matrix::Identity(2, 2);
  for (int i = 0; i < 3; ++i) ja += p[i] * sigma[i];
  ja /= 2.0;
  const ModeMatrix channel = build_channel(alpha, t);
  return {t, ModeMatrix(kron(ja, channel.mat()))};
}

MeasurementOutcome bell_project(const TripartiteState& state,
                                const BellBeam& beam) {
  const int dim_c = state.t.dim();
  const Matrix& j = state.matrix.mat();
  if (j.rows() != 4 * dim_c)
    throw DimensionMismatchError("bell_project: tripartite dimension mismatch");

  // partial inner product <psi| J |psi> over the path x polarisation factor
  Matrix post = Matrix::Zero(dim_c, dim_c);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      post += std::conj(beam.ket[a]) * beam.ket[b] *
              j.block(a * dim_c, b * dim_c, dim_c, dim_c);

  const double weight = post.trace().real();
  if (weight < 1e-14)
    throw ZeroWeightError("bell_project: projected intensity vanishes");
  return {weight, ModeMatrix(post / weight)};
}

Matrix correction(const BellBeam& beam, const SU2Frame& frame) {
  if (beam.index == 1) return Matrix::Identity(frame.dim(), frame.dim());
  const std::array<UnitVector3, 3> axes = {UnitVector3::e1(), UnitVector3::e2(),
                                           UnitVector3::e3()};
  const double pi = std::acos(-1.0);
  return wigner_rotation(frame, axes[beam.index - 2], pi,
                         RotationSign::positive);
}

ModeMatrix run_protocol(const BlochVector& p, double alpha, SpinLabel t,
                        const BellBeam& beam) {
  const TripartiteState state = make_tripartite(p, alpha, t);
  const MeasurementOutcome outcome = bell_project(state, beam);
  const SU2Frame frame = make_generators(t);
  const Matrix u = correction(beam, frame);
  return ModeMatrix(u * outcome.post_state.mat() * u.adjoint());
}

BlochVector retrieve_bloch(const ModeMatrix& j, double alpha, SpinLabel t) {
  if (alpha == 0.0)
    throw SingularityError(
        "retrieve_bloch: alpha = 0 leaves no retrievable signal");

  const std::array<UnitVector3, 3> axes = {UnitVector3::e1(), UnitVector3::e2(),
                                           UnitVector3::e3()};
  Eigen::Vector3d p;
  for (int i = 0; i < 3; ++i) {
    const ObservableResolution obs = equivalent_observable(axes[i], t);
    p[i] = (j.mat() * obs.op).trace().real() / alpha;
  }
  return BlochVector(p);
}

}  // namespace eqbeam
