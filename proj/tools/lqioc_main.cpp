// Copyright 2026 The lqioc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lqioc/experiments.hpp"

namespace {

// Exit codes: 0 success, 1 numeric/solver failure, 2 config or usage error.
constexpr int kOk = 0;
constexpr int kNumericFailure = 1;
constexpr int kConfigError = 2;

int dispatch(const std::string& command, const std::string& config_path,
             const std::string& out_dir, const std::string& dataset_path,
             const std::string& solution_path,
             std::optional<std::uint64_t> seed_override,
             const std::string& dump_path) {
  lqioc::RunConfig cfg = lqioc::load_config(config_path);
  if (seed_override) cfg.simulate.seed = *seed_override;

  if (command == "simulate") {
    const auto out = lqioc::run_simulate(cfg, out_dir);
    std::printf("wrote %s (%d trajectories)\n", out.dataset_path.c_str(),
                out.total);
    return kOk;
  }
  if (command == "estimate") {
    if (!dump_path.empty()) {
      const lqioc::Dataset ds = lqioc::read_dataset(dataset_path);
      const auto refs = cfg.build_references();
      std::map<std::string, lqioc::ReferenceSignal> used;
      for (const auto& tr : ds.trajectories)
        if (refs.count(tr.ref_id)) used.emplace(tr.ref_id, refs.at(tr.ref_id));
      lqioc::dump_program(
          lqioc::assemble_program(cfg.system, ds, used, cfg.noise,
                                  cfg.estimator)
              .program,
          dump_path);
      std::printf("wrote %s\n", dump_path.c_str());
    }
    const auto out = lqioc::run_estimate(cfg, dataset_path, out_dir);
    for (const auto& note : out.solution.diagnostics)
      std::fprintf(stderr, "warning: %s\n", note.c_str());
    std::printf("wrote %s (status %s, objective %.12g)\n",
                out.solution_path.c_str(),
                lqioc::conic::status_name(out.solution.status).c_str(),
                out.solution.objective_value);
    return out.solution.ok() ? kOk : kNumericFailure;
  }
  if (command == "consistency") {
    const auto out = lqioc::run_consistency(cfg, out_dir);
    for (const auto& [M, med] : out.medians)
      std::printf("M=%d  median relative error %.6g\n", M, med);
    std::printf("trend: %s, strict decrease: %s\n",
                out.nonincreasing ? "nonincreasing" : "violated",
                out.strict_decrease ? "yes" : "no");
    std::printf("wrote %s and %s\n", out.csv_path.c_str(),
                out.summary_path.c_str());
    return kOk;
  }
  if (command == "predict") {
    const auto out =
        lqioc::run_predict(cfg, solution_path, dataset_path, out_dir);
    for (const auto& g : out.groups)
      std::printf("ref %s N=%d (%d trajectories): rmse %.6g\n",
                  g.ref_id.c_str(), g.N, g.count, g.rmse);
    std::printf("wrote %s and %s\n", out.predictions_path.c_str(),
                out.rmse_path.c_str());
    return kOk;
  }
  if (command == "noise") {
    const auto out = lqioc::run_noise(cfg, dataset_path, out_dir);
    std::printf("wrote %s (%d samples)\n", out.path.c_str(),
                out.estimate.sample_count);
    return kOk;
  }
  std::fprintf(stderr, "unknown command %s\n", command.c_str());
  return kConfigError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forward simulation and cost estimation for finite-horizon "
               "tracking control"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".", dataset_path, solution_path,
              dump_path;
  std::optional<std::uint64_t> seed_override;

  auto add_common = [&](CLI::App* cmd, bool needs_dataset,
                        bool needs_solution) {
    cmd->add_option("--config", config_path, "config file (JSON)")
        ->required();
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--seed", seed_override, "override config.simulate.seed");
    if (needs_dataset)
      cmd->add_option("--dataset", dataset_path, "dataset file")->required();
    if (needs_solution)
      cmd->add_option("--solution", solution_path, "solution file")
          ->required();
  };

  add_common(app.add_subcommand("simulate", "synthesize a dataset"), false,
             false);
  auto* est = app.add_subcommand("estimate", "estimate the cost matrix");
  add_common(est, true, false);
  est->add_option("--dump-program", dump_path,
                  "also write the lowered cone program");
  add_common(app.add_subcommand("consistency",
                                "error-vs-sample-size experiment"),
             false, false);
  add_common(app.add_subcommand("predict",
                                "forward predictions against observations"),
             true, true);
  add_common(app.add_subcommand("noise", "estimate the noise covariance"),
             true, false);

  CLI11_PARSE(app, argc, argv);

  try {
    return dispatch(app.get_subcommands().front()->get_name(), config_path,
                    out_dir, dataset_path, solution_path, seed_override,
                    dump_path);
  } catch (const lqioc::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kNumericFailure;
  }
}
