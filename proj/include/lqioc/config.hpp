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

#ifndef LQIOC_CONFIG_HPP_
#define LQIOC_CONFIG_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lqioc/lowering.hpp"
#include "lqioc/noise_estimation.hpp"
#include "lqioc/simulate.hpp"

namespace lqioc {

struct ReferenceConfig {
  std::string id;
  Eigen::VectorXd x1;
  ReferenceInput input;
  int length = 0;
};

struct HorizonConfig {
  enum class Kind { Uniform, Pmf, List };
  Kind kind = Kind::Uniform;
  int nu1 = 0;
  int nu2 = 0;
  std::vector<double> pmf;  // Pmf
  std::vector<int> values;  // List, cycled by trajectory index
};

struct InitConfig {
  enum class Kind { RefOffsetUniform, RefStart, FixedList };
  Kind kind = Kind::RefStart;
  double halfwidth = 0.0;
  std::vector<Eigen::VectorXd> starts;

  InitSampler sampler() const;
};

struct SimulateConfig {
  int M = 0;  // trajectories per reference
  std::uint64_t seed = 0;
  bool store_controls = true;
};

struct ConsistencyConfig {
  enum class Mode { Regenerate, Subsample };
  std::vector<int> m_grid;
  std::vector<std::uint64_t> seeds;
  Mode mode = Mode::Regenerate;
  int workers = 4;
  std::string pool_dataset;  // Subsample only
};

// Everything an experiment run needs, loaded from one JSON config file.
struct RunConfig {
  DiscreteLTI system;
  std::vector<ReferenceConfig> references;
  HorizonConfig horizons;
  NoiseModel noise;
  InitConfig init;
  std::optional<Eigen::MatrixXd> true_Q;
  SimulateConfig simulate;
  EstimatorConfig estimator;
  ConsistencyConfig consistency;
  NoiseEstimationOptions noise_estimation;
  std::string config_hash;  // of the canonicalized source document

  std::map<std::string, ReferenceSignal> build_references() const;
  HorizonDistribution horizon_distribution() const;
};

// Parse and validate; ConfigError messages name the offending field.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

// FNV-1a over the canonical form of the document.
std::string hash_text(const std::string& text);

}  // namespace lqioc

#endif  // LQIOC_CONFIG_HPP_
