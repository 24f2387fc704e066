#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "eqbeam/types.hpp"

namespace eqbeam {

/// Labeled feature vectors; labels are integers in [0, n_classes).
struct Dataset {
  struct Sample {
    Eigen::VectorXd x;
    int label;
  };
  std::vector<Sample> samples;

  int feature_dim() const;
  int n_classes() const;  // max label + 1
};

/// CSV with header f1..fd,label. Malformed rows raise ParseError carrying
/// the 1-based row number.
Dataset load_dataset_csv(const std::filesystem::path& path);
void save_dataset_csv(const Dataset& data, const std::filesystem::path& path);

/// Deterministic shuffled split into (train, test).
std::pair<Dataset, Dataset> split_dataset(const Dataset& data,
                                          double train_fraction,
                                          unsigned long long seed);

/// Single-quNit variational classifier: encoder weights w (length d) and
/// the N^2-1 Euler angles of the measurement-basis unitary.
struct ClassifierModel {
  int n_classes = 2;
  int feature_dim = 0;
  Eigen::VectorXd w;
  Eigen::VectorXd angles;

  static ClassifierModel random_init(int n_classes, int feature_dim,
                                     unsigned long long seed);
  int parameter_count() const {
    return feature_dim + n_classes * n_classes - 1;
  }
};

struct TrainConfig {
  double learning_rate = 0.1;
  int epochs = 500;
  double fd_step = 1e-5;
  unsigned long long seed = 0;
};

struct Prediction {
  Eigen::VectorXd probabilities;
  int label;
};

/// Generalized Gell-Mann basis of su(N): symmetric then antisymmetric
/// pair families, then the N-1 diagonal generators; Tr(l_a l_b) = 2 d_ab.
std::vector<Matrix> gell_mann_basis(int n);

/// N-point discrete Fourier unitary (entries omega^{jk}/sqrt(N)); the
/// standard Hadamard at N = 2.
Matrix hadamard_general(int n);

/// e^{i S3bar (w.x)} H |0> with S3bar = diag(-(N-1)/2 .. (N-1)/2).
Vector encode(const Eigen::VectorXd& x, const Eigen::VectorXd& w, int n);

/// Ordered product e^{i l_1 a_1} ... e^{i l_{N^2-1} a_{N^2-1}}.
Matrix build_unitary(const Eigen::VectorXd& angles, int n);

/// Computational-basis probabilities of U|psi(x)>; ties resolve to the
/// lowest index.
Prediction predict(const ClassifierModel& model, const Eigen::VectorXd& x);

/// Mean negative log-likelihood over the batch, probabilities clamped
/// below at 1e-12.
double loss(const ClassifierModel& model, const Dataset& batch);

/// Central-difference gradient over (w, angles), length d + N^2 - 1.
Eigen::VectorXd grad_fd(const ClassifierModel& model, const Dataset& batch,
                        double step);

struct TraceRow {
  int epoch;
  double loss;
  double accuracy;
};

struct TrainResult {
  ClassifierModel model;
  std::vector<TraceRow> trace;  // epoch 0 is the pre-training state
};

/// Full-batch gradient descent for config.epochs steps.
TrainResult train(const ClassifierModel& model, const Dataset& data,
                  const TrainConfig& config);

double accuracy(const ClassifierModel& model, const Dataset& data);

/// Big-endian multiqubit basis map |i_{n-1} .. i_0> -> sum_k i_k 2^k.
int map_multiqubit_index(const std::vector<int>& bits);

/// Model JSON {N, d, w[], angles[]}.
void save_model_json(const ClassifierModel& model,
                     const std::filesystem::path& path);
ClassifierModel load_model_json(const std::filesystem::path& path);

/// Loss trace CSV with header epoch,loss,accuracy.
void save_trace_csv(const std::vector<TraceRow>& trace,
                    const std::filesystem::path& path);

}  // namespace eqbeam
