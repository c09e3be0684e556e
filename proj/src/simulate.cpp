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

#include "lqioc/simulate.hpp"

#include <utility>

#include "lqioc/common.hpp"

namespace lqioc {

Trajectory simulate_trajectory(const DiscreteLTI& sys,
                               const RiccatiBundle& bundle,
                               const Eigen::VectorXd& x_start, int N,
                               const NoiseModel& noise, Rng& rng,
                               const std::string& id,
                               const std::string& ref_id) {
  const int steps = bundle.total_steps();
  require(N >= 1 && N <= steps, "horizon out of range");
  require(x_start.size() == sys.n(), "start state dimension mismatch");
  require(noise.m() == sys.m(), "noise dimension mismatch");
  GaussianSampler sampler(noise);

  Trajectory tr;
  tr.id = id;
  tr.total_steps = steps;
  tr.N = N;
  tr.ref_id = ref_id;
  tr.states.reserve(N);
  tr.controls.reserve(N - 1);

  Eigen::VectorXd x = x_start;
  tr.states.push_back(x);
  for (int t = steps - N; t < steps - 1; ++t) {
    const Eigen::VectorXd u = optimal_input(bundle, t, x);
    const Eigen::VectorXd w = sampler.draw(rng);
    x = sys.A * x + sys.B * (u + w);
    numeric_check(x.allFinite(), "simulation diverged");
    tr.controls.push_back(u);
    tr.states.push_back(x);
  }
  return tr;
}

Trajectory simulate_trajectory(const DiscreteLTI& sys,
                               const RiccatiBundle& bundle,
                               const Eigen::VectorXd& x_start, int N,
                               const NoiseModel& noise, std::uint64_t seed,
                               const std::string& id,
                               const std::string& ref_id) {
  Rng rng(seed);
  return simulate_trajectory(sys, bundle, x_start, N, noise, rng, id, ref_id);
}

InitSampler ref_offset_uniform_init(double halfwidth) {
  return [halfwidth](Rng& rng, int, int start_step,
                     const ReferenceSignal& ref) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(ref.n());
    x(0) = ref.samples[start_step](0) + rng.uniform(-halfwidth, halfwidth);
    return x;
  };
}

InitSampler ref_start_init() {
  return [](Rng&, int, int start_step, const ReferenceSignal& ref) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(ref.n());
    x(0) = ref.samples[start_step](0);
    return x;
  };
}

InitSampler fixed_list_init(std::vector<Eigen::VectorXd> starts) {
  require(!starts.empty(), "fixed start list is empty");
  return [starts = std::move(starts)](Rng&, int traj_index, int,
                                      const ReferenceSignal&) {
    return starts[traj_index % starts.size()];
  };
}

Dataset synth_dataset(const DiscreteLTI& sys, const CostParams& cost,
                      const ReferenceSignal& ref,
                      const HorizonChooser& horizons, const InitSampler& init,
                      const NoiseModel& noise, int M,
                      std::uint64_t root_seed) {
  require(M >= 1, "need at least one trajectory");
  require(ref.total_steps() >= sys.n() + 1,
          "reference too short for the state dimension");

  const RiccatiBundle bundle = riccati(sys, cost, ref);

  Dataset ds;
  ds.total_steps = ref.total_steps();
  ds.trajectories.reserve(M);
  for (int i = 0; i < M; ++i) {
    Rng rng(split_seed(root_seed, static_cast<std::uint64_t>(i)));
    const int N = horizons(rng, i);
    const int start_step = ds.total_steps - N;
    const Eigen::VectorXd x0 = init(rng, i, start_step, ref);
    char id[32];
    std::snprintf(id, sizeof(id), "traj-%06d", i);
    ds.trajectories.push_back(
        simulate_trajectory(sys, bundle, x0, N, noise, rng, id, ref.id));
  }
  ds.validate();
  return ds;
}

Dataset synth_dataset(const DiscreteLTI& sys, const CostParams& cost,
                      const ReferenceSignal& ref,
                      const HorizonDistribution& horizons,
                      const InitSampler& init, const NoiseModel& noise, int M,
                      std::uint64_t root_seed) {
  horizons.validate();
  require(horizons.nu2 == ref.total_steps(),
          "horizon cap must equal the reference length");
  return synth_dataset(
      sys, cost, ref,
      [&horizons](Rng& rng, int) { return horizons.sample(rng); }, init,
      noise, M, root_seed);
}

}  // namespace lqioc
