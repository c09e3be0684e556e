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

#include "lqioc/noise_estimation.hpp"

#include "lqioc/common.hpp"

namespace lqioc {

NoiseEstimate estimate_noise_covariance(const Dataset& ds,
                                        const DiscreteLTI& sys,
                                        const NoiseEstimationOptions& opts) {
  ds.validate();
  require(ds.state_dim() == sys.n(), "dataset/system dimension mismatch");
  require(opts.skip_initial >= 0, "skip_initial must be nonnegative");

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys.B);
  const auto& sv = svd.singularValues();
  require(sv(sv.size() - 1) > 1e-12 * std::max(1.0, sv(0)),
          "B is rank deficient; cannot invert the input channel");
  // Left pseudoinverse (B'B)^{-1} B'.
  const Eigen::MatrixXd pinv_b =
      (sys.B.transpose() * sys.B).ldlt().solve(sys.B.transpose());

  std::vector<Eigen::VectorXd> w;
  for (const auto& tr : ds.trajectories) {
    for (int k = opts.skip_initial;
         k + 1 < static_cast<int>(tr.states.size()); ++k) {
      w.push_back(pinv_b * (tr.states[k + 1] - sys.A * tr.states[k]));
    }
  }
  const int count = static_cast<int>(w.size());
  require(count >= std::max(opts.min_samples, 2),
          "not enough noise samples");

  const int m = sys.m();
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(m);
  for (const auto& v : w) mean += v;
  mean /= static_cast<double>(count);

  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(m, m);
  for (const auto& v : w) {
    const Eigen::VectorXd d = v - mean;
    cov += d * d.transpose();
  }
  cov /= static_cast<double>(count - 1);

  NoiseEstimate est;
  est.model.sigma_w = symmetrized(cov);
  est.mean = mean;
  est.sample_count = count;
  return est;
}

}  // namespace lqioc
