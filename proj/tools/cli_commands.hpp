#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqbeam/classifier.hpp"
#include "eqbeam/optics.hpp"

namespace eqbeam::cli {

struct RenderOptions {
  double t = 1.0;  // spin value as typed: 0.5, 1, 1.5, ...
  double theta = 0.0;
  double phi = 0.0;
  GridSpec grid;
  std::filesystem::path out_dir = ".";
};

/// Writes the coherent-beam intensity as PGM + JSON sidecar; returns the
/// image path.
std::filesystem::path cmd_render(const RenderOptions& options);

struct IdiffOptions {
  std::vector<double> alphas = {0.2, 0.4, 0.9};
  std::vector<double> thetas;  // defaults to 0, pi/4, pi/2, 3pi/4, pi
  GridSpec grid;
  std::filesystem::path out_dir = ".";
};

/// One image per (alpha, theta) plus a CSV of peak |I_diff| per image;
/// returns the CSV path.
std::filesystem::path cmd_idiff(const IdiffOptions& options);

struct WernerOptions {
  double alpha_min = 0.0;
  double alpha_max = 1.0;
  double alpha_step = 0.1;
  double t_min = 0.5;
  double t_max = 2.0;  // scanned in half-integer steps
  std::filesystem::path out_dir = ".";
};

/// CSV rows (alpha, T, separable, ppt_min_eig, mixedness, t_min); rows
/// outside the positivity range of the family are skipped. Returns the
/// CSV path.
std::filesystem::path cmd_werner(const WernerOptions& options);

struct ProtocolOptions {
  std::array<double, 3> p = {0.0, 0.0, 1.0};
  double alpha = 0.5;
  double t = 0.5;
  int beam = 1;
  bool all_beams = false;
  std::filesystem::path out_dir = ".";
};

/// Runs the transfer protocol; returns the JSON records (also written to
/// protocol.json). alpha = 0 yields records with an "error": "singularity"
/// retrieval field instead of p_out.
nlohmann::json cmd_protocol(const ProtocolOptions& options);

struct ClassifyTrainOptions {
  std::filesystem::path data;
  std::filesystem::path model_out;  // default <out>/model.json
  int n_classes = 0;                // 0 = infer from labels
  TrainConfig config;
  std::filesystem::path out_dir = ".";
};

/// Trains, writes the model JSON and loss_trace.csv; returns summary
/// metrics.
nlohmann::json cmd_classify_train(const ClassifyTrainOptions& options);

struct ClassifyEvalOptions {
  std::filesystem::path data;
  std::filesystem::path model;
  std::filesystem::path metrics_out;  // default <out>/metrics.json
  std::filesystem::path out_dir = ".";
};

/// Evaluates a saved model; writes and returns {accuracy, confusion}.
nlohmann::json cmd_classify_eval(const ClassifyEvalOptions& options);

/// Compact %g-style number formatting used in generated file names.
std::string format_number(double value);

}  // namespace eqbeam::cli
