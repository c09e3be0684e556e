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

#ifndef LQIOC_EXPERIMENTS_HPP_
#define LQIOC_EXPERIMENTS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "lqioc/config.hpp"
#include "lqioc/estimator.hpp"

namespace lqioc {

// Runners behind the CLI subcommands. Every runner is deterministic given
// (config, seeds): reruns produce byte-identical files. Each writes a
// manifest.json carrying the config hash so artifacts stay traceable.

struct SimulateOutcome {
  std::string dataset_path;
  std::map<int, int> counts;  // trajectories per horizon length
  int total = 0;
};
SimulateOutcome run_simulate(const RunConfig& cfg, const std::string& out_dir);

// Synthesizes one dataset the way run_simulate would, without touching disk.
// M is per reference; trajectory ids are prefixed by the reference id when
// several references are configured.
Dataset generate_dataset(const RunConfig& cfg, int M_per_ref,
                         std::uint64_t root_seed);

struct EstimateOutcome {
  IOCSolution solution;
  std::string solution_path;
};
EstimateOutcome run_estimate(const RunConfig& cfg,
                             const std::string& dataset_path,
                             const std::string& out_dir);

void write_solution_file(const std::string& path, const Eigen::MatrixXd& Q,
                         const std::string& config_hash);
Eigen::MatrixXd read_solution_file(const std::string& path);

struct ConsistencyRow {
  int M = 0;
  std::uint64_t seed = 0;
  double rel_error = 0.0;
  std::string status;
  int iterations = 0;
};
struct ConsistencyOutcome {
  std::vector<ConsistencyRow> rows;                // grid-major order
  std::vector<std::pair<int, double>> medians;     // per M
  bool nonincreasing = false;  // at most one median inversion
  bool strict_decrease = false;  // last median strictly below first
  std::string csv_path;
  std::string summary_path;
};
ConsistencyOutcome run_consistency(const RunConfig& cfg,
                                   const std::string& out_dir);

struct PredictGroup {
  std::string ref_id;
  int N = 0;
  int count = 0;
  double rmse = 0.0;
};
struct PredictOutcome {
  std::vector<PredictGroup> groups;
  std::string predictions_path;
  std::string rmse_path;
};
PredictOutcome run_predict(const RunConfig& cfg,
                           const std::string& solution_path,
                           const std::string& dataset_path,
                           const std::string& out_dir);

struct NoiseOutcome {
  NoiseEstimate estimate;
  std::string path;
};
NoiseOutcome run_noise(const RunConfig& cfg, const std::string& dataset_path,
                       const std::string& out_dir);

}  // namespace lqioc

#endif  // LQIOC_EXPERIMENTS_HPP_
