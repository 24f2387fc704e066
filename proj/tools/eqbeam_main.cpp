#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli_commands.hpp"
#include "eqbeam/types.hpp"

namespace {

using eqbeam::Error;

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const eqbeam::SingularityError*>(&e)) return "singularity";
  if (dynamic_cast<const eqbeam::OutOfRangeError*>(&e)) return "out_of_range";
  if (dynamic_cast<const eqbeam::DimensionMismatchError*>(&e))
    return "dimension_mismatch";
  if (dynamic_cast<const eqbeam::LengthMismatchError*>(&e))
    return "length_mismatch";
  if (dynamic_cast<const eqbeam::NotHermitianError*>(&e))
    return "not_hermitian";
  if (dynamic_cast<const eqbeam::NotPositiveError*>(&e)) return "not_positive";
  if (dynamic_cast<const eqbeam::ZeroWeightError*>(&e)) return "zero_weight";
  if (dynamic_cast<const eqbeam::ZeroIntensityError*>(&e))
    return "zero_intensity";
  if (dynamic_cast<const eqbeam::EmptyBatchError*>(&e)) return "empty_batch";
  if (dynamic_cast<const eqbeam::UnboundedError*>(&e)) return "unbounded";
  if (dynamic_cast<const eqbeam::ParseError*>(&e)) return "parse";
  return "error";
}

void emit_error(const std::string& kind, const std::string& message) {
  nlohmann::json j;
  j["error"] = kind;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
}

// Rewrites argv so that values from the JSON config file replace any
// flags already present; the config wins over the command line.
std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
      args.erase(args.begin() + i);
      break;
    }
  }
  if (config_path.empty()) return args;

  std::ifstream in(config_path);
  if (!in) throw eqbeam::ParseError("cannot open config: " + config_path);
  nlohmann::json config;
  try {
    in >> config;
  } catch (const nlohmann::json::exception& e) {
    throw eqbeam::ParseError("config " + config_path + ": " + e.what());
  }
  if (!config.is_object())
    throw eqbeam::ParseError("config " + config_path +
                             ": top level must be an object");

  for (const auto& [key, value] : config.items()) {
    const std::string flag = "--" + key;
    // drop any existing occurrences of the flag and its values
    for (std::size_t i = 0; i < args.size();) {
      if (args[i] == flag || args[i].rfind(flag + "=", 0) == 0) {
        args.erase(args.begin() + i);
        while (i < args.size() && args[i].rfind("--", 0) != 0)
          args.erase(args.begin() + i);
      } else {
        ++i;
      }
    }
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_array()) {
      args.push_back(flag);
      for (const auto& item : value)
        args.push_back(item.is_string() ? item.get<std::string>()
                                        : item.dump());
    } else if (value.is_string()) {
      args.push_back(flag);
      args.push_back(value.get<std::string>());
    } else {
      args.push_back(flag);
      args.push_back(value.dump());
    }
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace eqbeam::cli;

  CLI::App app{"equivalent-beams toolkit: SU(2) coherent beams, Werner "
               "separability, the path-to-OAM transfer protocol, and the "
               "single-quNit classifier"};
  app.require_subcommand(1);

  std::string out_dir = ".";
  unsigned long long seed = 0;
  app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  app.add_option("--seed", seed, "Random seed (classifier training)")
      ->capture_default_str();
  // --config is consumed before parsing; declared here for --help only
  std::string config_dummy;
  app.add_option("--config", config_dummy,
                 "JSON file whose keys override the flags");

  RenderOptions render;
  auto* render_cmd =
      app.add_subcommand("render", "Render an SU(2) coherent-beam intensity");
  render_cmd->fallthrough();
  render_cmd->add_option("--T", render.t, "Spin label (integer for OAM)")
      ->capture_default_str();
  render_cmd->add_option("--theta", render.theta, "Polar angle, rad")
      ->capture_default_str();
  render_cmd->add_option("--phi", render.phi, "Azimuthal angle, rad")
      ->capture_default_str();
  render_cmd->add_option("--extent", render.grid.extent,
                         "Grid half-width in waist units")
      ->capture_default_str();
  render_cmd->add_option("--res", render.grid.resolution, "Pixels per side")
      ->capture_default_str();

  IdiffOptions idiff;
  auto* idiff_cmd = app.add_subcommand(
      "idiff", "Intensity-difference maps of the noisy-channel output");
  idiff_cmd->fallthrough();
  idiff_cmd->add_option("--alpha", idiff.alphas, "Channel purity values")
      ->capture_default_str();
  idiff_cmd->add_option("--theta", idiff.thetas,
                        "Encoding angles (default 0, pi/4, pi/2, 3pi/4, pi)");
  idiff_cmd->add_option("--extent", idiff.grid.extent,
                        "Grid half-width in waist units")
      ->capture_default_str();
  idiff_cmd->add_option("--res", idiff.grid.resolution, "Pixels per side")
      ->capture_default_str();

  WernerOptions werner;
  auto* werner_cmd = app.add_subcommand(
      "werner", "Tabulate Werner-family separability and mixedness");
  werner_cmd->fallthrough();
  werner_cmd->add_option("--alpha-min", werner.alpha_min, "Range start")
      ->capture_default_str();
  werner_cmd->add_option("--alpha-max", werner.alpha_max, "Range end")
      ->capture_default_str();
  werner_cmd->add_option("--alpha-step", werner.alpha_step, "Range step")
      ->capture_default_str();
  werner_cmd->add_option("--t-min", werner.t_min, "Smallest T")
      ->capture_default_str();
  werner_cmd->add_option("--t-max", werner.t_max, "Largest T")
      ->capture_default_str();

  ProtocolOptions protocol;
  auto* protocol_cmd = app.add_subcommand(
      "protocol", "Run the path-to-OAM information-transfer protocol");
  protocol_cmd->fallthrough();
  protocol_cmd->add_option("--p", protocol.p,
                           "Input Bloch vector (three numbers)");
  protocol_cmd->add_option("--alpha", protocol.alpha, "Channel parameter")
      ->capture_default_str();
  protocol_cmd->add_option("--T", protocol.t, "OAM spin label")
      ->capture_default_str();
  protocol_cmd->add_option("--beam", protocol.beam, "Bell beam index 1..4")
      ->check(CLI::Range(1, 4))
      ->capture_default_str();
  protocol_cmd->add_flag("--all-beams", protocol.all_beams,
                         "Run all four Bell beams");

  auto* classify_cmd =
      app.add_subcommand("classify", "Single-quNit variational classifier");
  classify_cmd->fallthrough();
  classify_cmd->require_subcommand(1);

  ClassifyTrainOptions train_opts;
  auto* train_cmd = classify_cmd->add_subcommand("train", "Train a model");
  train_cmd->fallthrough();
  train_cmd->add_option("--data", train_opts.data, "Dataset CSV")->required();
  train_cmd->add_option("--model", train_opts.model_out,
                        "Model output path (default <out>/model.json)");
  train_cmd->add_option("--N", train_opts.n_classes,
                        "Class count (default: infer from labels)");
  train_cmd
      ->add_option("--lr", train_opts.config.learning_rate, "Learning rate")
      ->capture_default_str();
  train_cmd->add_option("--epochs", train_opts.config.epochs, "Epochs")
      ->capture_default_str();
  train_cmd
      ->add_option("--fd-step", train_opts.config.fd_step,
                   "Finite-difference step")
      ->capture_default_str();

  ClassifyEvalOptions eval_opts;
  auto* eval_cmd = classify_cmd->add_subcommand("eval", "Evaluate a model");
  eval_cmd->fallthrough();
  eval_cmd->add_option("--data", eval_opts.data, "Dataset CSV")->required();
  eval_cmd->add_option("--model", eval_opts.model, "Model JSON")->required();
  eval_cmd->add_option("--metrics", eval_opts.metrics_out,
                       "Metrics output path (default <out>/metrics.json)");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = apply_config(std::move(args));
    // CLI11 consumes reversed argv
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    emit_error("usage", e.what());
    return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
  } catch (const std::exception& e) {
    emit_error(error_kind(e), e.what());
    return 1;
  }

  try {
    render.out_dir = out_dir;
    idiff.out_dir = out_dir;
    werner.out_dir = out_dir;
    protocol.out_dir = out_dir;
    train_opts.out_dir = out_dir;
    train_opts.config.seed = seed;
    eval_opts.out_dir = out_dir;

    if (render_cmd->parsed()) {
      std::cout << cmd_render(render).string() << "\n";
    } else if (idiff_cmd->parsed()) {
      std::cout << cmd_idiff(idiff).string() << "\n";
    } else if (werner_cmd->parsed()) {
      std::cout << cmd_werner(werner).string() << "\n";
    } else if (protocol_cmd->parsed()) {
      std::cout << cmd_protocol(protocol).dump(2) << "\n";
    } else if (classify_cmd->parsed()) {
      if (train_cmd->parsed())
        std::cout << cmd_classify_train(train_opts).dump(2) << "\n";
      else
        std::cout << cmd_classify_eval(eval_opts).dump(2) << "\n";
    }
  } catch (const std::exception& e) {
    emit_error(error_kind(e), e.what());
    return 1;
  }
  return 0;
}
