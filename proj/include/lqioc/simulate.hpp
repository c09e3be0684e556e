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

#ifndef LQIOC_SIMULATE_HPP_
#define LQIOC_SIMULATE_HPP_

#include <cstdint>
#include <functional>
#include <string>

#include "lqioc/noise.hpp"
#include "lqioc/riccati.hpp"
#include "lqioc/trajectory.hpp"

namespace lqioc {

// Closed-loop rollout over the active window: the start state is placed at
// absolute step total_steps - N, then x_{t+1} = A x_t + B(u_t + w_t) with
// u_t from the bundle's feedback law and w_t ~ N(0, sigma_w). The feedback
// law itself never sees the noise model.
Trajectory simulate_trajectory(const DiscreteLTI& sys,
                               const RiccatiBundle& bundle,
                               const Eigen::VectorXd& x_start, int N,
                               const NoiseModel& noise, Rng& rng,
                               const std::string& id = "",
                               const std::string& ref_id = "");

// Seed-taking convenience overload.
Trajectory simulate_trajectory(const DiscreteLTI& sys,
                               const RiccatiBundle& bundle,
                               const Eigen::VectorXd& x_start, int N,
                               const NoiseModel& noise, std::uint64_t seed,
                               const std::string& id = "",
                               const std::string& ref_id = "");

// Draws the start state of trajectory `traj_index`, whose active window
// begins at absolute step `start_step` of `ref`.
using InitSampler = std::function<Eigen::VectorXd(
    Rng& rng, int traj_index, int start_step, const ReferenceSignal& ref)>;

// Start at the reference position with an offset on the first coordinate
// drawn uniformly from [-halfwidth, halfwidth]; remaining coordinates zero.
InitSampler ref_offset_uniform_init(double halfwidth);

// Start exactly at [reference position, 0, ..., 0].
InitSampler ref_start_init();

// Cycle deterministically through a fixed list of start states.
InitSampler fixed_list_init(std::vector<Eigen::VectorXd> starts);

// Picks the horizon of trajectory `traj_index`.
using HorizonChooser = std::function<int(Rng& rng, int traj_index)>;

// M closed-loop episodes with horizons from `horizons` and starts from
// `init`. Each trajectory gets its own stream via split_seed(root_seed, i),
// so the result is reproducible and order-independent.
Dataset synth_dataset(const DiscreteLTI& sys, const CostParams& cost,
                      const ReferenceSignal& ref,
                      const HorizonDistribution& horizons,
                      const InitSampler& init, const NoiseModel& noise, int M,
                      std::uint64_t root_seed);

// Same, with an arbitrary horizon rule (e.g. a fixed list cycled by index).
Dataset synth_dataset(const DiscreteLTI& sys, const CostParams& cost,
                      const ReferenceSignal& ref,
                      const HorizonChooser& horizons, const InitSampler& init,
                      const NoiseModel& noise, int M, std::uint64_t root_seed);

}  // namespace lqioc

#endif  // LQIOC_SIMULATE_HPP_
