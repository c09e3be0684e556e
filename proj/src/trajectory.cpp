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

#include "lqioc/trajectory.hpp"

#include <cmath>

#include "lqioc/common.hpp"

namespace lqioc {

void Trajectory::validate() const {
  require(N >= 1 && N <= total_steps, "horizon out of range");
  require(static_cast<int>(states.size()) == N,
          "state count must equal the horizon length");
  if (!controls.empty())
    require(static_cast<int>(controls.size()) == N - 1,
            "control count must be horizon length minus one");
  const auto dim = states[0].size();
  for (const auto& x : states) {
    require(x.size() == dim, "state dimension varies within trajectory");
    require(x.allFinite(), "trajectory has non-finite states");
  }
}

int Dataset::state_dim() const {
  return trajectories.empty()
             ? 0
             : static_cast<int>(trajectories[0].states[0].size());
}

std::map<int, int> Dataset::horizon_counts() const {
  std::map<int, int> counts;
  for (const auto& tr : trajectories) ++counts[tr.N];
  return counts;
}

void Dataset::validate() const {
  const int dim = state_dim();
  for (const auto& tr : trajectories) {
    tr.validate();
    require(tr.total_steps == total_steps,
            "trajectory terminal length differs from dataset");
    require(static_cast<int>(tr.states[0].size()) == dim,
            "state dimension varies within dataset");
  }
}

std::map<int, double> empirical_horizon_weights(const Dataset& ds) {
  require(ds.size() >= 1, "dataset is empty");
  std::map<int, double> weights;
  const double m = static_cast<double>(ds.size());
  for (const auto& [horizon, count] : ds.horizon_counts())
    weights[horizon] = static_cast<double>(count) / m;
  return weights;
}

std::vector<std::string> dataset_diagnostics(const Dataset& ds) {
  std::vector<std::string> notes;
  if (ds.size() == 0) {
    notes.push_back("dataset is empty");
    return notes;
  }
  const auto counts = ds.horizon_counts();
  if (counts.find(ds.total_steps) == counts.end())
    notes.push_back(
        "no full-length trajectory observed; the terminal step is never "
        "exercised and the estimate may not be identifiable");
  return notes;
}

HorizonDistribution HorizonDistribution::uniform(int nu1, int nu2) {
  HorizonDistribution d;
  d.nu1 = nu1;
  d.nu2 = nu2;
  d.pmf.assign(nu2 - nu1 + 1, 1.0 / static_cast<double>(nu2 - nu1 + 1));
  return d;
}

void HorizonDistribution::validate() const {
  require(nu1 >= 1 && nu1 <= nu2, "need 1 <= nu1 <= nu2");
  require(static_cast<int>(pmf.size()) == nu2 - nu1 + 1,
          "pmf length must cover [nu1, nu2]");
  double sum = 0.0;
  for (double p : pmf) {
    require(p >= 0.0, "pmf entries must be nonnegative");
    sum += p;
  }
  require(std::abs(sum - 1.0) <= 1e-12, "pmf must sum to one");
  require(pmf.back() > 0.0, "the full horizon must have positive probability");
}

int HorizonDistribution::sample(Rng& rng) const {
  const double u = rng.uniform01();
  double acc = 0.0;
  for (int k = 0; k < static_cast<int>(pmf.size()); ++k) {
    acc += pmf[k];
    if (u < acc) return nu1 + k;
  }
  return nu2;
}

}  // namespace lqioc
