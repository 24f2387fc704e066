// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "eqbeam/classifier.hpp"
#include "eqbeam/equivalence.hpp"
#include "eqbeam/optics.hpp"
#include "eqbeam/protocol.hpp"
#include "eqbeam/su2.hpp"
#include "test_support.hpp"

using namespace eqbeam;
using namespace eqbeam::testing;

namespace {

int failures = 0;

void report(int criterion, const char* name, bool ok, const std::string& detail) {
  std::printf("%s criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion,
              name, detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

// (1/2)(1 + sigma.p) in the ascending T=1/2 frame basis.
ModeMatrix qubit_state(const Eigen::Vector3d& p) {
  const SU2Frame half = make_generators(SpinLabel(1));
  return ModeMatrix(Matrix::Identity(2, 2) / 2.0 + half.dot(p));
}

void criterion_1_overcompleteness() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int twice = 1; twice <= 8; ++twice) {
    const SU2Frame frame = make_generators(SpinLabel(twice));
    worst = std::max(
        worst, resolution_of_identity_residual(frame, twice + 2));
  }
  const double elapsed = seconds_since(start);
  report(1, "overcompleteness residual < 1e-8 for T = 1/2..4",
         worst < 1e-8 && elapsed < 1.0,
         fmt("worst %.1e, %.3f s", worst, elapsed));
}

void criterion_2_equivalence() {
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Vector3d p = random_bloch(rng);
    const int twice = 1 + static_cast<int>(rng() % 6);  // T <= 3
    const SpinLabel t(twice);
    const int order = std::max(2, twice) + 1;
    const QFunctionGrid low =
        q_function(qubit_state(p), make_generators(SpinLabel(1)), order);
    const QFunctionGrid high = q_function(equivalent_state(BlochVector(p), t),
                                          make_generators(t), order);
    worst = std::max(worst, low.max_abs_diff(high));
  }
  report(2, "equivalent states share the qubit Q-function (< 1e-9)",
         worst < 1e-9, fmt("worst pointwise diff %.2e", worst));
}

void criterion_3_observable_bridge() {
  std::mt19937_64 rng(103);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Vector3d p = random_bloch(rng);
    const Eigen::Vector3d n = random_unit(rng);
    const int twice = 1 + static_cast<int>(rng() % 6);
    const ModeMatrix rho = equivalent_state(BlochVector(p), SpinLabel(twice));
    const auto obs = equivalent_observable(UnitVector3(n[0], n[1], n[2]),
                                           SpinLabel(twice));
    const double expectation = (rho.mat() * obs.op).trace().real();
    worst = std::max(worst, std::abs(expectation - p.dot(n)));
  }
  report(3, "expectation bridge Tr[rho_T O_T] = p.m (< 1e-10)", worst < 1e-10,
         fmt("worst |diff| %.2e", worst));
}

void criterion_4_separability() {
  bool ok = true;
  std::string detail;
  for (int twice : {1, 2}) {
    const SpinLabel t(twice);
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 60; ++iter) {
      const double mid = (lo + hi) / 2;
      if (ppt_min_eig(werner_state(mid, t), 2) < 0)
        hi = mid;
      else
        lo = mid;
    }
    const double tv = t.value();
    const double err = std::abs(lo - tv / (tv + 1));
    ok = ok && err < 1e-6;
    detail += fmt("T=%.1f boundary err %.1e; ", tv, err);
  }
  const bool tmin_ok = werner_t_min(0.5) == SpinLabel(2);
  ok = ok && tmin_ok;
  detail += tmin_ok ? "t_min(0.5) = 1" : "t_min(0.5) wrong";
  report(4, "PPT boundary at T/(T+1), t_min(0.5) = 1", ok, detail);
}

void criterion_5_separable_expansion() {
  const ModeMatrix mixture = separable_decomposition_t1().assemble();
  const ModeMatrix target = werner_state(0.5, SpinLabel(2));
  const double err = (mixture.mat() - target.mat()).norm();
  report(5, "six-member expansion reproduces the alpha=1/2, T=1 Werner state",
         err < 1e-12, fmt("Frobenius error %.2e", err));
}

void criterion_6_protocol() {
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_weight = 0.0, worst_spread = 0.0, worst_roundtrip = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int twice = 1 + static_cast<int>(rng() % 4);  // T <= 2
    const SpinLabel t(twice);
    const double lo = -t.value() / (t.value() + 1);
    const double alpha = lo + (1.0 - lo) * u(rng);
    const BlochVector p(random_bloch(rng));

    const TripartiteState state = make_tripartite(p, alpha, t);
    Matrix first;
    for (int k = 1; k <= 4; ++k) {
      const MeasurementOutcome outcome = bell_project(state, bell_beam(k));
      worst_weight = std::max(worst_weight, std::abs(outcome.weight - 0.25));
      const ModeMatrix corrected = run_protocol(p, alpha, t, bell_beam(k));
      if (k == 1)
        first = corrected.mat();
      else
        worst_spread =
            std::max(worst_spread, (corrected.mat() - first).norm());
    }
    if (std::abs(alpha) >= 0.1) {
      const BlochVector back =
          retrieve_bloch(ModeMatrix(first), alpha, t);
      worst_roundtrip =
          std::max(worst_roundtrip, (back.vec() - p.vec()).norm());
    }
  }

  bool singularity_raised = false;
  try {
    retrieve_bloch(ModeMatrix(Matrix::Identity(2, 2) / 2.0), 0.0, SpinLabel(1));
  } catch (const SingularityError&) {
    singularity_raised = true;
  }

  const bool ok = worst_weight < 1e-12 && worst_spread < 1e-10 &&
                  worst_roundtrip < 1e-10 && singularity_raised;
  report(6, "protocol: 1/4 weights, outcome independence, round trip",
         ok,
         fmt("weight err %.1e, spread %.1e", worst_weight, worst_spread) +
             fmt(", roundtrip %.1e", worst_roundtrip) +
             (singularity_raised ? ", singularity raised"
                                 : ", singularity NOT raised"));
}

void criterion_7_figure_scales() {
  const auto start = std::chrono::steady_clock::now();
  const GridSpec grid{3.0, 512};
  const double reference_peaks[3][2] = {{0.2, 0.06}, {0.4, 0.12}, {0.9, 0.25}};
  bool ok = true;
  std::string detail;
  for (const auto& [alpha, target] : reference_peaks) {
    double peak = 0.0, integral = 0.0;
    for (double theta : {0.0, kPi / 4, kPi / 2, 3 * kPi / 4, kPi}) {
      const IntensityImage image = i_diff(alpha, theta, grid);
      peak = std::max(peak, image.peak_abs());
      integral = std::max(integral, std::abs(image.total()));
    }
    const bool in_range = std::abs(peak - target) <= 0.25 * target;
    ok = ok && in_range && integral < 1e-3;
    detail += fmt("a=%.1f peak %.4f; ", alpha, peak);
  }
  const double elapsed = seconds_since(start);
  ok = ok && elapsed < 10.0;
  report(7, "I_diff reference peaks within 25%, zero plane integral", ok,
         detail + fmt("%.2f s", elapsed));
}

void criterion_8_mixedness_monotone() {
  bool ok = true;
  double margin = 1.0;
  for (double alpha : {0.3, 0.5, 1.0}) {
    double previous = -1.0;
    for (int twice = 1; twice <= 8; ++twice) {
      const double m = mixedness(werner_state(alpha, SpinLabel(twice)));
      margin = std::min(margin, m - previous);
      ok = ok && m > previous;
      previous = m;
    }
  }
  report(8, "Werner mixedness strictly increases with T", ok,
         fmt("min step %.3e", margin));
}

void criterion_9_classifier() {
  const auto start = std::chrono::steady_clock::now();

  // probability normalization on random models
  std::mt19937_64 rng(109);
  std::normal_distribution<double> g;
  double worst_norm = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int d = 1 + static_cast<int>(rng() % 4);
    const ClassifierModel model = ClassifierModel::random_init(n, d, rng());
    Eigen::VectorXd x(d);
    for (int i = 0; i < d; ++i) x[i] = g(rng);
    worst_norm = std::max(
        worst_norm, std::abs(predict(model, x).probabilities.sum() - 1.0));
  }

  // the 200-point two-blob benchmark, seed 7
  Dataset blobs;
  {
    std::mt19937_64 blob_rng(7);
    std::normal_distribution<double> noise(0.0, 0.4);
    for (int i = 0; i < 200; ++i) {
      Dataset::Sample s;
      s.x.resize(2);
      s.x << (i % 2 == 0 ? -1.5 : 1.5) + noise(blob_rng), noise(blob_rng);
      s.label = i % 2;
      blobs.samples.push_back(std::move(s));
    }
  }

  const ClassifierModel init = ClassifierModel::random_init(2, 2, 7);
  const Eigen::VectorXd g5 = grad_fd(init, blobs, 1e-5);
  const Eigen::VectorXd g6 = grad_fd(init, blobs, 1e-6);
  const double grad_rel = (g5 - g6).norm() / std::max(1e-12, g5.norm());

  TrainConfig config;
  config.learning_rate = 0.1;
  config.epochs = 500;
  config.seed = 7;
  const TrainResult run_a = train(init, blobs, config);
  const TrainResult run_b = train(init, blobs, config);
  bool deterministic = run_a.trace.size() == run_b.trace.size();
  if (deterministic)
    for (std::size_t i = 0; i < run_a.trace.size(); ++i)
      deterministic = deterministic &&
                      run_a.trace[i].loss == run_b.trace[i].loss;
  const double final_accuracy = run_a.trace.back().accuracy;
  const double elapsed = seconds_since(start);

  const bool ok = worst_norm < 1e-10 && grad_rel < 1e-3 && deterministic &&
                  final_accuracy >= 0.95 && elapsed < 60.0;
  report(9, "classifier: simplex, gradients, determinism, 95% blobs", ok,
         fmt("norm err %.1e, grad rel %.1e", worst_norm, grad_rel) +
             fmt(", accuracy %.3f, %.1f s", final_accuracy, elapsed) +
             (deterministic ? "" : ", NON-DETERMINISTIC"));
}

void criterion_10_c_entropy() {
  const double pure = c_entropy(qubit_state({0, 0, 1}));
  const double mixed = c_entropy(ModeMatrix(Matrix::Identity(2, 2) / 2.0));
  bool decreasing = true;
  double previous = mixed + 1.0;
  for (double p = 0.1; p < 0.95; p += 0.1) {
    const double s = c_entropy(qubit_state({0, 0, p}));
    decreasing = decreasing && s < previous;
    previous = s;
  }
  const bool ok = std::abs(pure) < 1e-12 &&
                  std::abs(mixed - std::log(2.0)) < 1e-12 && decreasing;
  report(10, "c-entropy: 0 pure, log 2 unpolarised, monotone", ok,
         fmt("pure %.1e, mixed-log2 %.1e", pure,
             std::abs(mixed - std::log(2.0))));
}

}  // namespace

int main() {
  criterion_1_overcompleteness();
  criterion_2_equivalence();
  criterion_3_observable_bridge();
  criterion_4_separability();
  criterion_5_separable_expansion();
  criterion_6_protocol();
  criterion_7_figure_scales();
  criterion_8_mixedness_monotone();
  criterion_9_classifier();
  criterion_10_c_entropy();
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
