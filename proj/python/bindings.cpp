#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqbeam/classifier.hpp"
#include "eqbeam/equivalence.hpp"
#include "eqbeam/optics.hpp"
#include "eqbeam/protocol.hpp"
#include "eqbeam/su2.hpp"

namespace py = pybind11;
using namespace eqbeam;

namespace {

SpinLabel label_of(double t) { return SpinLabel::from_value(t); }

UnitVector3 axis_of(const Eigen::Vector3d& v) {
  const double n = v.norm();
  if (n == 0.0) throw OutOfRangeError("axis must be nonzero");
  return UnitVector3(v[0] / n, v[1] / n, v[2] / n);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "SU(2) coherent beams, equivalent states, Werner separability, the "
      "path-to-OAM transfer protocol, and the single-quNit classifier";

  py::register_exception<Error>(m, "EqbeamError");

  // --- su2 ---
  m.def(
      "generators",
      [](double t) {
        const SU2Frame f = make_generators(label_of(t));
        return py::make_tuple(f.t1, f.t2, f.t3);
      },
      py::arg("t"), "Generator triple (T1, T2, T3) in ascending m basis");
  m.def(
      "coherent_state",
      [](double t, double theta, double phi, double psi) {
        return Vector(
            coherent_state(make_generators(label_of(t)), theta, phi, psi));
      },
      py::arg("t"), py::arg("theta"), py::arg("phi") = 0.0,
      py::arg("psi") = 0.0);
  m.def(
      "wigner_rotation",
      [](double t, const Eigen::Vector3d& axis, double angle, int sign) {
        return wigner_rotation(make_generators(label_of(t)), axis_of(axis),
                               angle,
                               sign >= 0 ? RotationSign::positive
                                         : RotationSign::negative);
      },
      py::arg("t"), py::arg("axis"), py::arg("angle"), py::arg("sign") = 1);
  m.def(
      "resolution_of_identity_residual",
      [](double t, int order) {
        return resolution_of_identity_residual(make_generators(label_of(t)),
                                               order);
      },
      py::arg("t"), py::arg("order"));

  // --- equivalence ---
  m.def(
      "q_function",
      [](const Matrix& mat, double t, int order) {
        const QFunctionGrid grid =
            q_function(ModeMatrix(mat), make_generators(label_of(t)), order);
        return py::make_tuple(grid.quad.theta, grid.quad.phi, grid.values);
      },
      py::arg("matrix"), py::arg("t"), py::arg("order"),
      "Returns (theta nodes, phi nodes, values)");
  m.def(
      "equivalent_state",
      [](const Eigen::Vector3d& p, double t) {
        return equivalent_state(BlochVector(p), label_of(t)).mat();
      },
      py::arg("p"), py::arg("t"));
  m.def(
      "equivalent_observable",
      [](const Eigen::Vector3d& m_axis, double t) {
        const auto obs = equivalent_observable(axis_of(m_axis), label_of(t));
        return py::make_tuple(obs.op, obs.projectors);
      },
      py::arg("m"), py::arg("t"),
      "Returns (operator, projectors); projectors only filled at T=1");
  m.def(
      "werner_state",
      [](double alpha, double t) {
        return werner_state(alpha, label_of(t)).mat();
      },
      py::arg("alpha"), py::arg("t"));
  m.def(
      "werner_t_min",
      [](double alpha) { return werner_t_min(alpha).value(); },
      py::arg("alpha"));
  m.def(
      "mixedness", [](const Matrix& m) { return mixedness(ModeMatrix(m)); },
      py::arg("matrix"));
  m.def(
      "c_entropy", [](const Matrix& m) { return c_entropy(ModeMatrix(m)); },
      py::arg("matrix"));
  m.def(
      "partial_transpose",
      [](const Matrix& m, int dim_a) { return partial_transpose(m, dim_a); },
      py::arg("matrix"), py::arg("dim_a"));
  m.def(
      "ppt_min_eig",
      [](const Matrix& m, int dim_a) {
        return ppt_min_eig(ModeMatrix(m), dim_a);
      },
      py::arg("matrix"), py::arg("dim_a") = 2);
  m.def("separable_decomposition_t1", []() {
    std::vector<py::tuple> members;
    for (const auto& member : separable_decomposition_t1().members)
      members.push_back(
          py::make_tuple(member.weight, Vector(member.left),
                         Vector(member.right)));
    return members;
  });
  m.def(
      "polarization_matrix",
      [](const std::vector<Complex>& ex, const std::vector<Complex>& ey) {
        return polarization_matrix_from_samples(ex, ey).mat();
      },
      py::arg("ex"), py::arg("ey"));
  m.def(
      "degree_of_polarization",
      [](const Matrix& j) { return degree_of_polarization(ModeMatrix(j)); },
      py::arg("matrix"));
  m.def(
      "equivalence_check",
      [](const Matrix& m1, double t1, const Matrix& m2, double t2,
         double tol) {
        return equivalence_check(ModeMatrix(m1), label_of(t1), ModeMatrix(m2),
                                 label_of(t2), tol);
      },
      py::arg("m1"), py::arg("t1"), py::arg("m2"), py::arg("t2"),
      py::arg("tol") = 1e-9);

  // --- optics ---
  m.def(
      "lg_field",
      [](int radial, int azimuthal, double waist, double extent,
         int resolution) {
        return lg_field({radial, azimuthal, waist}, {extent, resolution})
            .values;
      },
      py::arg("p"), py::arg("l"), py::arg("waist") = 1.0,
      py::arg("extent") = 3.0, py::arg("resolution") = 512);
  m.def(
      "coherent_beam_intensity",
      [](double t, double theta, double phi, double extent, int resolution) {
        return coherent_beam_intensity(label_of(t), theta, phi,
                                       {extent, resolution})
            .values;
      },
      py::arg("t"), py::arg("theta"), py::arg("phi") = 0.0,
      py::arg("extent") = 3.0, py::arg("resolution") = 512);
  m.def(
      "mixed_beam_intensity",
      [](const Matrix& mat, double extent, int resolution) {
        const ModeMatrix m(mat);
        std::vector<LGModeSpec> basis;
        const int t_int = (m.dim() - 1) / 2;
        if (2 * t_int + 1 != m.dim())
          throw DimensionMismatchError(
              "mixed_beam_intensity: need odd dimension for LG_{0,-T..T}");
        for (int l = -t_int; l <= t_int; ++l) basis.push_back({0, l, 1.0});
        return mixed_beam_intensity(m, basis, {extent, resolution}).values;
      },
      py::arg("matrix"), py::arg("extent") = 3.0, py::arg("resolution") = 512,
      "Incoherent eigenmode mixture over the LG_{0,-T..+T} basis");
  m.def(
      "i_diff",
      [](double alpha, double theta, double extent, int resolution) {
        return i_diff(alpha, theta, {extent, resolution}).values;
      },
      py::arg("alpha"), py::arg("theta"), py::arg("extent") = 3.0,
      py::arg("resolution") = 512);

  // --- protocol ---
  m.def(
      "run_protocol",
      [](const Eigen::Vector3d& p, double alpha, double t, int beam) {
        return run_protocol(BlochVector(p), alpha, label_of(t),
                            bell_beam(beam))
            .mat();
      },
      py::arg("p"), py::arg("alpha"), py::arg("t"), py::arg("beam") = 1);
  m.def(
      "bell_project",
      [](const Eigen::Vector3d& p, double alpha, double t, int beam) {
        const MeasurementOutcome outcome = bell_project(
            make_tripartite(BlochVector(p), alpha, label_of(t)),
            bell_beam(beam));
        return py::make_tuple(outcome.weight, outcome.post_state.mat());
      },
      py::arg("p"), py::arg("alpha"), py::arg("t"), py::arg("beam"),
      "Returns (weight, uncorrected OAM state)");
  m.def(
      "retrieve_bloch",
      [](const Matrix& j, double alpha, double t) {
        return retrieve_bloch(ModeMatrix(j), alpha, label_of(t)).vec();
      },
      py::arg("matrix"), py::arg("alpha"), py::arg("t"));

  // --- classifier ---
  py::class_<ClassifierModel>(m, "ClassifierModel")
      .def_static("random_init", &ClassifierModel::random_init,
                  py::arg("n_classes"), py::arg("feature_dim"),
                  py::arg("seed"))
      .def_readwrite("n_classes", &ClassifierModel::n_classes)
      .def_readwrite("feature_dim", &ClassifierModel::feature_dim)
      .def_readwrite("w", &ClassifierModel::w)
      .def_readwrite("angles", &ClassifierModel::angles)
      .def_property_readonly("parameter_count",
                             &ClassifierModel::parameter_count);

  m.def("gell_mann_basis", &gell_mann_basis, py::arg("n"));
  m.def("hadamard_general", &hadamard_general, py::arg("n"));
  m.def("encode", &encode, py::arg("x"), py::arg("w"), py::arg("n"));
  m.def("build_unitary", &build_unitary, py::arg("angles"), py::arg("n"));
  m.def(
      "predict",
      [](const ClassifierModel& model, const Eigen::VectorXd& x) {
        const Prediction pred = predict(model, x);
        return py::make_tuple(pred.probabilities, pred.label);
      },
      py::arg("model"), py::arg("x"), "Returns (probabilities, label)");
  m.def("map_multiqubit_index", &map_multiqubit_index, py::arg("bits"));
  m.def(
      "train",
      [](const ClassifierModel& model, const Eigen::MatrixXd& x,
         const std::vector<int>& labels, double learning_rate, int epochs,
         double fd_step) {
        if (x.rows() != static_cast<Eigen::Index>(labels.size()))
          throw LengthMismatchError("train: X rows must match labels");
        Dataset data;
        for (Eigen::Index i = 0; i < x.rows(); ++i)
          data.samples.push_back({x.row(i).transpose(), labels[i]});
        TrainConfig config;
        config.learning_rate = learning_rate;
        config.epochs = epochs;
        config.fd_step = fd_step;
        const TrainResult result = train(model, data, config);
        Eigen::MatrixXd trace(result.trace.size(), 3);
        for (std::size_t i = 0; i < result.trace.size(); ++i)
          trace.row(i) << result.trace[i].epoch, result.trace[i].loss,
              result.trace[i].accuracy;
        return py::make_tuple(result.model, trace);
      },
      py::arg("model"), py::arg("x"), py::arg("labels"),
      py::arg("learning_rate") = 0.1, py::arg("epochs") = 500,
      py::arg("fd_step") = 1e-5,
      "Full-batch gradient descent; returns (model, trace[epoch,loss,acc])");
}
