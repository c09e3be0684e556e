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

#ifndef LQIOC_TRAJECTORY_HPP_
#define LQIOC_TRAJECTORY_HPP_

#include <Eigen/Dense>

#include <map>
#include <string>
#include <vector>

#include "lqioc/rng.hpp"

namespace lqioc {

// One observed tracking episode. Only the active window is stored: states
// cover absolute steps total_steps-N .. total_steps-1 (0-based), i.e.
// states[k] sits at absolute step start_step() + k. Steps before the window
// are identically zero by convention and never materialized. Controls are
// optional metadata; the estimator never reads them.
struct Trajectory {
  std::string id;
  int total_steps = 0;  // common terminal length of every episode
  int N = 0;            // planning-horizon length of this episode
  std::string ref_id;
  std::vector<Eigen::VectorXd> states;    // size N
  std::vector<Eigen::VectorXd> controls;  // size N-1 when present, else empty

  int start_step() const { return total_steps - N; }
  bool has_controls() const { return !controls.empty(); }
  void validate() const;
};

struct Dataset {
  std::vector<Trajectory> trajectories;
  int total_steps = 0;

  int size() const { return static_cast<int>(trajectories.size()); }
  int state_dim() const;
  std::map<int, int> horizon_counts() const;
  void validate() const;
};

// Horizon weights M_N / M; the empirical stand-in for the horizon law.
std::map<int, double> empirical_horizon_weights(const Dataset& ds);

// Non-fatal data problems worth surfacing before estimation, e.g. no
// full-length episode present (the terminal step is then unidentifiable).
std::vector<std::string> dataset_diagnostics(const Dataset& ds);

// Probability mass over horizon lengths nu1..nu2.
struct HorizonDistribution {
  int nu1 = 0;
  int nu2 = 0;
  std::vector<double> pmf;  // pmf[k] = P(N = nu1 + k)

  static HorizonDistribution uniform(int nu1, int nu2);
  static HorizonDistribution point(int n) { return uniform(n, n); }

  void validate() const;
  int sample(Rng& rng) const;  // inverse-CDF draw
};

}  // namespace lqioc

#endif  // LQIOC_TRAJECTORY_HPP_
