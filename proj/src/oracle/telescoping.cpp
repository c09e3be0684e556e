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

#include "lqioc/oracle/telescoping.hpp"

#include <cmath>

#include "lqioc/common.hpp"

namespace lqioc::oracle {

double telescoping_check(const DiscreteLTI& sys, const Trajectory& traj,
                         const Eigen::MatrixXd& Q,
                         const CertificateChain& chain,
                         const ReferenceSignal& ref, const NoiseModel& noise) {
  traj.validate();
  require(traj.has_controls(), "telescoping check needs stored controls");
  require(chain.total_steps() == traj.total_steps,
          "chain/trajectory length mismatch");
  require(ref.total_steps() == traj.total_steps,
          "reference/trajectory length mismatch");

  const int s = traj.start_step();
  const int last = traj.total_steps - 1;
  const Eigen::MatrixXd noise_gain =
      sys.B * noise.sigma_w * sys.B.transpose();

  auto shared_terms = [&](int t, const Eigen::VectorXd& x) {
    return 0.5 * chain.xi(t) + 0.5 * x.dot(Q * x) -
           (Q * ref.samples[t]).dot(x) -
           0.5 * noise_gain.cwiseProduct(chain.P[t + 1]).sum();
  };
  auto value_terms = [&](int t, const Eigen::VectorXd& x) {
    return 0.5 * x.dot(chain.P[t] * x) + chain.eta[t].dot(x);
  };

  // Boundary form: the value-function differences telescope away.
  double boundary = value_terms(last, traj.states.back()) -
                    value_terms(s, traj.states.front());
  for (int t = s; t < last; ++t)
    boundary += shared_terms(t, traj.states[t - s]);

  // Step-sum form: the next state is re-propagated from the stored control.
  double stepsum = 0.0;
  for (int t = s; t < last; ++t) {
    const Eigen::VectorXd& x = traj.states[t - s];
    const Eigen::VectorXd xn = sys.A * x + sys.B * traj.controls[t - s];
    stepsum += value_terms(t + 1, xn) - value_terms(t, x) + shared_terms(t, x);
  }
  return std::abs(boundary - stepsum);
}

}  // namespace lqioc::oracle
