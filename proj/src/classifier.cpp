#include "eqbeam/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "eqbeam/su2.hpp"

namespace eqbeam {

int Dataset::feature_dim() const {
  return samples.empty() ? 0 : static_cast<int>(samples.front().x.size());
}

int Dataset::n_classes() const {
  int max_label = -1;
  for (const auto& s : samples) max_label = std::max(max_label, s.label);
  return max_label + 1;
}

Dataset load_dataset_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open dataset: " + path.string());

  const auto strip_cr = [](std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
  };

  std::string line;
  if (!std::getline(in, line))
    throw ParseError("dataset " + path.string() + ": missing header row");
  strip_cr(line);

  // header f1,...,fd,label
  std::stringstream header(line);
  std::vector<std::string> columns;
  std::string cell;
  while (std::getline(header, cell, ',')) columns.push_back(cell);
  if (columns.empty() || columns.back() != "label")
    throw ParseError("dataset " + path.string() +
                     ": last header column must be 'label'");
  const int dim = static_cast<int>(columns.size()) - 1;
  if (dim < 1)
    throw ParseError("dataset " + path.string() + ": no feature columns");

  Dataset data;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    strip_cr(line);
    if (line.empty()) continue;
    std::stringstream fields(line);
    Dataset::Sample sample;
    sample.x.resize(dim);
    for (int i = 0; i < dim; ++i) {
      if (!std::getline(fields, cell, ','))
        throw ParseError("dataset " + path.string() + ": row " +
                         std::to_string(row) + ": too few fields");
      try {
        sample.x[i] = std::stod(cell);
      } catch (const std::exception&) {
        throw ParseError("dataset " + path.string() + ": row " +
                         std::to_string(row) + ": bad number '" + cell + "'");
      }
    }
    if (!std::getline(fields, cell, ','))
      throw ParseError("dataset " + path.string() + ": row " +
                       std::to_string(row) + ": missing label");
    try {
      sample.label = std::stoi(cell);
    } catch (const std::exception&) {
      throw ParseError("dataset " + path.string() + ": row " +
                       std::to_string(row) + ": bad label '" + cell + "'");
    }
    if (sample.label < 0)
      throw ParseError("dataset " + path.string() + ": row " +
                       std::to_string(row) + ": negative label");
    data.samples.push_back(std::move(sample));
  }
  return data;
}

void save_dataset_csv(const Dataset& data, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write dataset: " + path.string());
  const int dim = data.feature_dim();
  for (int i = 1; i <= dim; ++i) out << "f" << i << ",";
  out << "label\n";
  out.precision(17);
  for (const auto& s : data.samples) {
    for (int i = 0; i < dim; ++i) out << s.x[i] << ",";
    out << s.label << "\n";
  }
}

std::pair<Dataset, Dataset> split_dataset(const Dataset& data,
                                          double train_fraction,
                                          unsigned long long seed) {
  if (train_fraction < 0.0 || train_fraction > 1.0)
    throw OutOfRangeError("split_dataset: fraction must lie in [0, 1]");
  std::vector<std::size_t> order(data.samples.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  const auto cut = static_cast<std::size_t>(
      std::llround(train_fraction * static_cast<double>(order.size())));
  std::pair<Dataset, Dataset> out;
  for (std::size_t i = 0; i < order.size(); ++i)
    (i < cut ? out.first : out.second)
        .samples.push_back(data.samples[order[i]]);
  return out;
}

ClassifierModel ClassifierModel::random_init(int n_classes, int feature_dim,
                                             unsigned long long seed) {
  if (n_classes < 2) throw OutOfRangeError("classifier: N must be >= 2");
  if (feature_dim < 1) throw OutOfRangeError("classifier: d must be >= 1");
  ClassifierModel model;
  model.n_classes = n_classes;
  model.feature_dim = feature_dim;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  model.w.resize(feature_dim);
  for (int i = 0; i < feature_dim; ++i) model.w[i] = u(rng);
  model.angles.resize(n_classes * n_classes - 1);
  for (int i = 0; i < model.angles.size(); ++i) model.angles[i] = u(rng);
  return model;
}

std::vector<Matrix> gell_mann_basis(int n) {
  if (n < 2) throw OutOfRangeError("gell_mann_basis: N must be >= 2");
  std::vector<Matrix> basis;
  basis.reserve(n * n - 1);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Matrix m = Matrix::Zero(n, n);
      m(j, k) = 1;
      m(k, j) = 1;
      basis.push_back(std::move(m));
    }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Matrix m = Matrix::Zero(n, n);
      m(j, k) = Complex(0, -1);
      m(k, j) = Complex(0, 1);
      basis.push_back(std::move(m));
    }
  for (int l = 1; l < n; ++l) {
    Matrix m = Matrix::Zero(n, n);
    const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) m(j, j) = scale;
    m(l, l) = -l * scale;
    basis.push_back(std::move(m));
  }
  return basis;
}

Matrix hadamard_general(int n) {
  if (n < 2) throw OutOfRangeError("hadamard_general: N must be >= 2");
  Matrix h(n, n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  const double two_pi = 2.0 * std::acos(-1.0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      h(j, k) = norm * std::exp(Complex(0, two_pi * j * k / n));
  return h;
}

Vector encode(const Eigen::VectorXd& x, const Eigen::VectorXd& w, int n) {
  if (x.size() != w.size())
    throw LengthMismatchError("encode: feature/weight length mismatch");
  const double phase = w.dot(x);
  Vector state(n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) {
    const double m = -(n - 1) / 2.0 + k;  // S3bar eigenvalue
    state[k] = norm * std::exp(Complex(0, m * phase));
  }
  return state;
}

Matrix build_unitary(const Eigen::VectorXd& angles, int n) {
  if (angles.size() != static_cast<Eigen::Index>(n) * n - 1)
    throw LengthMismatchError("build_unitary: need N^2-1 angles");
  const std::vector<Matrix> basis = gell_mann_basis(n);
  Matrix u = Matrix::Identity(n, n);
  for (std::size_t j = 0; j < basis.size(); ++j)
    u *= herm_exp(basis[j], Complex(angles[static_cast<Eigen::Index>(j)], 0));
  return u;
}

Prediction predict(const ClassifierModel& model, const Eigen::VectorXd& x) {
  const Vector state =
      build_unitary(model.angles, model.n_classes) *
      encode(x, model.w, model.n_classes);
  Prediction out;
  out.probabilities = state.cwiseAbs2();
  out.probabilities.maxCoeff(&out.label);  // ties resolve to lowest index
  return out;
}

double loss(const ClassifierModel& model, const Dataset& batch) {
  if (batch.samples.empty()) throw EmptyBatchError("loss: empty batch");
  const Matrix u = build_unitary(model.angles, model.n_classes);
  double total = 0.0;
  for (const auto& s : batch.samples) {
    if (s.label >= model.n_classes)
      throw OutOfRangeError("loss: label outside model classes");
    const Vector state = u * encode(s.x, model.w, model.n_classes);
    const double p = std::norm(state[s.label]);
    total -= std::log(std::max(p, 1e-12));
  }
  return total / static_cast<double>(batch.samples.size());
}

Eigen::VectorXd grad_fd(const ClassifierModel& model, const Dataset& batch,
                        double step) {
  if (step <= 0.0) throw OutOfRangeError("grad_fd: step must be positive");
  ClassifierModel probe = model;
  Eigen::VectorXd grad(model.parameter_count());

  auto central = [&](double& param, int slot) {
    const double saved = param;
    param = saved + step;
    const double up = loss(probe, batch);
    param = saved - step;
    const double down = loss(probe, batch);
    param = saved;
    grad[slot] = (up - down) / (2.0 * step);
  };

  for (int i = 0; i < model.feature_dim; ++i) central(probe.w[i], i);
  for (int i = 0; i < probe.angles.size(); ++i)
    central(probe.angles[i], model.feature_dim + i);
  return grad;
}

double accuracy(const ClassifierModel& model, const Dataset& data) {
  if (data.samples.empty()) throw EmptyBatchError("accuracy: empty dataset");
  int correct = 0;
  for (const auto& s : data.samples)
    if (predict(model, s.x).label == s.label) ++correct;
  return static_cast<double>(correct) /
         static_cast<double>(data.samples.size());
}

TrainResult train(const ClassifierModel& model, const Dataset& data,
                  const TrainConfig& config) {
  if (config.learning_rate < 0.0)
    throw OutOfRangeError("train: learning rate must be >= 0");
  if (config.epochs < 0) throw OutOfRangeError("train: epochs must be >= 0");
  if (data.n_classes() != model.n_classes)
    throw DimensionMismatchError(
        "train: dataset classes do not match model dimension N");
  if (data.feature_dim() != model.feature_dim)
    throw DimensionMismatchError(
        "train: dataset feature dimension does not match model");

  TrainResult result{model, {}};
  result.trace.push_back({0, loss(result.model, data),
                          accuracy(result.model, data)});
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    const Eigen::VectorXd grad =
        grad_fd(result.model, data, config.fd_step);
    result.model.w -= config.learning_rate * grad.head(model.feature_dim);
    result.model.angles -=
        config.learning_rate * grad.tail(model.angles.size());
    result.trace.push_back({epoch, loss(result.model, data),
                            accuracy(result.model, data)});
  }
  return result;
}

int map_multiqubit_index(const std::vector<int>& bits) {
  if (bits.empty()) throw LengthMismatchError("map_multiqubit_index: no bits");
  int value = 0;
  for (int b : bits) {
    if (b != 0 && b != 1)
      throw OutOfRangeError("map_multiqubit_index: bits must be 0 or 1");
    value = 2 * value + b;
  }
  return value;
}

void save_model_json(const ClassifierModel& model,
                     const std::filesystem::path& path) {
  nlohmann::json j;
  j["N"] = model.n_classes;
  j["d"] = model.feature_dim;
  j["w"] = std::vector<double>(model.w.data(), model.w.data() + model.w.size());
  j["angles"] = std::vector<double>(model.angles.data(),
                                    model.angles.data() + model.angles.size());
  std::ofstream out(path);
  if (!out) throw Error("cannot write model: " + path.string());
  out << j.dump(2) << "\n";
}

ClassifierModel load_model_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("model " + path.string() + ": " + e.what());
  }
  ClassifierModel model;
  try {
    model.n_classes = j.at("N").get<int>();
    model.feature_dim = j.at("d").get<int>();
    const auto w = j.at("w").get<std::vector<double>>();
    const auto angles = j.at("angles").get<std::vector<double>>();
    model.w = Eigen::Map<const Eigen::VectorXd>(w.data(), w.size());
    model.angles =
        Eigen::Map<const Eigen::VectorXd>(angles.data(), angles.size());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("model " + path.string() + ": " + e.what());
  }
  if (model.w.size() != model.feature_dim ||
      model.angles.size() !=
          static_cast<Eigen::Index>(model.n_classes) * model.n_classes - 1)
    throw ParseError("model " + path.string() + ": inconsistent lengths");
  return model;
}

void save_trace_csv(const std::vector<TraceRow>& trace,
                    const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write trace: " + path.string());
  out << "epoch,loss,accuracy\n";
  out.precision(17);
  for (const auto& row : trace)
    out << row.epoch << "," << row.loss << "," << row.accuracy << "\n";
}

}  // namespace eqbeam
