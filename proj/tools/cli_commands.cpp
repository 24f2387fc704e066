#include "cli_commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "eqbeam/equivalence.hpp"
#include "eqbeam/pgm.hpp"
#include "eqbeam/protocol.hpp"

namespace eqbeam::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

void ensure_dir(const std::filesystem::path& dir) {
  if (!dir.empty()) std::filesystem::create_directories(dir);
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", value);
  return buf;
}

std::filesystem::path cmd_render(const RenderOptions& options) {
  ensure_dir(options.out_dir);
  const SpinLabel t = SpinLabel::from_value(options.t);
  const IntensityImage image =
      coherent_beam_intensity(t, options.theta, options.phi, options.grid);

  const std::string stem = "intensity_T" + format_number(options.t) +
                           "_theta" + format_number(options.theta) + "_phi" +
                           format_number(options.phi);
  const auto pgm_path = options.out_dir / (stem + ".pgm");
  const ImageScale scale = write_pgm16(image, pgm_path);
  write_image_sidecar(scale, options.grid, options.out_dir / (stem + ".json"),
                      {{"T", options.t},
                       {"theta", options.theta},
                       {"phi", options.phi}});
  return pgm_path;
}

std::filesystem::path cmd_idiff(const IdiffOptions& options) {
  ensure_dir(options.out_dir);
  std::vector<double> thetas = options.thetas;
  if (thetas.empty())
    thetas = {0.0, kPi / 4, kPi / 2, 3 * kPi / 4, kPi};

  const auto csv_path = options.out_dir / "idiff_peaks.csv";
  std::ofstream csv(csv_path);
  if (!csv) throw Error("cannot write " + csv_path.string());
  csv << "alpha,theta,peak_abs\n";
  csv.precision(12);

  for (double alpha : options.alphas) {
    for (double theta : thetas) {
      const IntensityImage image = i_diff(alpha, theta, options.grid);
      const std::string stem = "idiff_alpha" + format_number(alpha) +
                               "_theta" + format_number(theta);
      const ImageScale scale =
          write_pgm16(image, options.out_dir / (stem + ".pgm"));
      write_image_sidecar(scale, options.grid,
                          options.out_dir / (stem + ".json"),
                          {{"alpha", alpha}, {"theta", theta}});
      csv << format_number(alpha) << "," << format_number(theta) << ","
          << image.peak_abs() << "\n";
    }
  }
  if (!csv) throw Error("short write: " + csv_path.string());
  return csv_path;
}

std::filesystem::path cmd_werner(const WernerOptions& options) {
  if (options.alpha_step <= 0.0)
    throw OutOfRangeError("werner: alpha-step must be positive");
  if (options.t_min < 0.5 || options.t_max < options.t_min)
    throw OutOfRangeError("werner: bad T range");
  ensure_dir(options.out_dir);

  const auto csv_path = options.out_dir / "werner_table.csv";
  std::ofstream csv(csv_path);
  if (!csv) throw Error("cannot write " + csv_path.string());
  csv << "alpha,T,separable,ppt_min_eig,mixedness,t_min\n";
  csv.precision(12);

  const int t_lo = static_cast<int>(std::lround(2 * options.t_min));
  const int t_hi = static_cast<int>(std::lround(2 * options.t_max));
  const int n_alpha = static_cast<int>(
      std::floor((options.alpha_max - options.alpha_min) /
                     options.alpha_step + 1e-9)) + 1;

  for (int ia = 0; ia < n_alpha; ++ia) {
    const double alpha =
        std::min(options.alpha_min + ia * options.alpha_step,
                 options.alpha_max);
    std::string t_min_text;
    if (std::abs(alpha) >= 1.0) {
      t_min_text = "infinite";
    } else {
      t_min_text = format_number(werner_t_min(alpha).value());
    }
    for (int twice = t_lo; twice <= t_hi; ++twice) {
      const SpinLabel t(twice);
      const double tv = t.value();
      if (alpha > 1.0 + 1e-12 || alpha < -tv / (tv + 1.0) - 1e-12)
        continue;  // family not positive there
      const ModeMatrix state = werner_state(alpha, t);
      const bool separable = std::abs(alpha) <= tv / (tv + 1.0) + 1e-12;
      csv << format_number(alpha) << "," << format_number(tv) << ","
          << (separable ? "true" : "false") << "," << ppt_min_eig(state, 2)
          << "," << mixedness(state) << "," << t_min_text << "\n";
    }
  }
  if (!csv) throw Error("short write: " + csv_path.string());
  return csv_path;
}

nlohmann::json cmd_protocol(const ProtocolOptions& options) {
  ensure_dir(options.out_dir);
  const BlochVector p(options.p[0], options.p[1], options.p[2]);
  const SpinLabel t = SpinLabel::from_value(options.t);

  std::vector<int> beams;
  if (options.all_beams)
    beams = {1, 2, 3, 4};
  else
    beams = {options.beam};

  nlohmann::json records = nlohmann::json::array();
  for (int index : beams) {
    const BellBeam beam = bell_beam(index);
    const TripartiteState state = make_tripartite(p, options.alpha, t);
    const MeasurementOutcome outcome = bell_project(state, beam);
    const ModeMatrix corrected = run_protocol(p, options.alpha, t, beam);

    nlohmann::json record;
    record["p_in"] = {p[0], p[1], p[2]};
    record["alpha"] = options.alpha;
    record["T"] = t.value();
    record["beam"] = index;
    record["weight"] = outcome.weight;
    try {
      const BlochVector out = retrieve_bloch(corrected, options.alpha, t);
      record["p_out"] = {out[0], out[1], out[2]};
      record["roundtrip_error"] = (out.vec() - p.vec()).norm();
    } catch (const SingularityError&) {
      record["error"] = "singularity";
    }
    records.push_back(std::move(record));
  }

  const nlohmann::json out =
      options.all_beams ? records : records.front();
  std::ofstream file(options.out_dir / "protocol.json");
  if (!file) throw Error("cannot write protocol.json");
  file << out.dump(2) << "\n";
  return out;
}

nlohmann::json cmd_classify_train(const ClassifyTrainOptions& options) {
  ensure_dir(options.out_dir);
  const Dataset data = load_dataset_csv(options.data);
  if (data.samples.empty())
    throw EmptyBatchError("classify train: dataset has no rows");

  int distinct = 0;
  {
    std::vector<bool> seen(static_cast<std::size_t>(data.n_classes()), false);
    for (const auto& s : data.samples) seen[s.label] = true;
    for (bool b : seen) distinct += b ? 1 : 0;
  }
  const int n = options.n_classes > 0 ? options.n_classes : data.n_classes();
  if (n != data.n_classes() || distinct != data.n_classes())
    throw DimensionMismatchError(
        "classify train: N must equal the number of distinct labels 0..N-1");

  const ClassifierModel init =
      ClassifierModel::random_init(n, data.feature_dim(), options.config.seed);
  const TrainResult result = train(init, data, options.config);

  const auto model_path = options.model_out.empty()
                              ? options.out_dir / "model.json"
                              : options.model_out;
  save_model_json(result.model, model_path);
  save_trace_csv(result.trace, options.out_dir / "loss_trace.csv");

  nlohmann::json summary;
  summary["model"] = model_path.string();
  summary["epochs"] = options.config.epochs;
  summary["final_loss"] = result.trace.back().loss;
  summary["final_accuracy"] = result.trace.back().accuracy;
  return summary;
}

nlohmann::json cmd_classify_eval(const ClassifyEvalOptions& options) {
  ensure_dir(options.out_dir);
  const Dataset data = load_dataset_csv(options.data);
  if (data.samples.empty())
    throw EmptyBatchError("classify eval: dataset has no rows");
  const ClassifierModel model = load_model_json(options.model);
  if (data.feature_dim() != model.feature_dim)
    throw DimensionMismatchError("classify eval: feature dimension mismatch");
  if (data.n_classes() > model.n_classes)
    throw DimensionMismatchError("classify eval: label outside model classes");

  std::vector<std::vector<int>> confusion(
      model.n_classes, std::vector<int>(model.n_classes, 0));
  int correct = 0;
  for (const auto& s : data.samples) {
    const Prediction pred = predict(model, s.x);
    confusion[s.label][pred.label] += 1;
    if (pred.label == s.label) ++correct;
  }

  nlohmann::json metrics;
  metrics["accuracy"] =
      static_cast<double>(correct) / static_cast<double>(data.samples.size());
  metrics["confusion"] = confusion;

  const auto metrics_path = options.metrics_out.empty()
                                ? options.out_dir / "metrics.json"
                                : options.metrics_out;
  std::ofstream file(metrics_path);
  if (!file) throw Error("cannot write " + metrics_path.string());
  file << metrics.dump(2) << "\n";
  return metrics;
}

}  // namespace eqbeam::cli
