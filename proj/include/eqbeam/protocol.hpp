#pragma once

#include <array>

#include "eqbeam/mode_matrix.hpp"
#include "eqbeam/su2.hpp"
#include "eqbeam/types.hpp"

namespace eqbeam {

/// One of the four maximally correlated path x polarisation modes used as
/// measurement projectors, with |H) = |0), |V) = |1):
///   1: (|0)|V) - |1)|H))/sqrt2    2: (|0)|H) - |1)|V))/sqrt2
///   3: (|0)|H) + |1)|V))/sqrt2    4: (|0)|V) + |1)|H))/sqrt2
struct BellBeam {
  int index;
  Vector ket;  // dim 4 on path(2) x polarisation(2)

  Matrix projector() const { return ket * ket.adjoint(); }
};

BellBeam bell_beam(int index);
std::array<BellBeam, 4> all_bell_beams();

/// Mode matrix on the ordered product path(2) x polarisation(2) x OAM(2T+1).
struct TripartiteState {
  SpinLabel t;
  ModeMatrix matrix;
};

/// Werner channel on polarisation x OAM:
/// (1/(2(2T+1)))(1 - alpha sigma.That).
ModeMatrix build_channel(double alpha, SpinLabel t);

/// (1/2)(1 + sigma.p) on path, tensored with the channel.
TripartiteState make_tripartite(const BlochVector& p, double alpha,
                                SpinLabel t);

struct MeasurementOutcome {
  double weight;          // fraction of the input intensity
  ModeMatrix post_state;  // renormalized OAM state
};

/// Projects path x polarisation onto the Bell beam; the OAM factor keeps
/// weight Tr[(P x 1) J] of the intensity. Throws ZeroWeightError when the
/// projected intensity vanishes.
MeasurementOutcome bell_project(const TripartiteState& state,
                                const BellBeam& beam);

/// Post-measurement unitary on the OAM factor: identity for beam 1, and
/// e^{+i (T.e_k) pi} for beams k+1 = 2, 3, 4.
Matrix correction(const BellBeam& beam, const SU2Frame& frame);

/// Full transfer: project, correct, return the OAM mode matrix. Equals
/// (1/(2T+1))(1 + alpha That.p) for every Bell beam.
ModeMatrix run_protocol(const BlochVector& p, double alpha, SpinLabel t,
                        const BellBeam& beam);

/// p_i = (1/alpha) Tr[J (3T/(T+1)) (T.e_i)/T]; exact inverse of
/// run_protocol. Throws SingularityError at alpha = 0.
BlochVector retrieve_bloch(const ModeMatrix& j, double alpha, SpinLabel t);

}  // namespace eqbeam
