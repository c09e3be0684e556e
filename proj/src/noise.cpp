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

#include "lqioc/noise.hpp"

#include "lqioc/common.hpp"

namespace lqioc {

void NoiseModel::validate(double psd_tol) const {
  require(sigma_w.rows() == sigma_w.cols(), "sigma_w must be square");
  require(all_finite(sigma_w), "sigma_w has non-finite entries");
  require(asymmetry(sigma_w) <= 1e-12 * (1.0 + sigma_w.cwiseAbs().maxCoeff()),
          "sigma_w is not symmetric");
  require(min_eigenvalue(sigma_w) >= -psd_tol,
          "sigma_w is not positive semidefinite");
}

GaussianSampler::GaussianSampler(const NoiseModel& noise) {
  noise.validate();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      symmetrized(noise.sigma_w));
  numeric_check(es.info() == Eigen::Success,
                "cannot factor noise covariance");
  const Eigen::VectorXd clamped = es.eigenvalues().cwiseMax(0.0);
  factor_ = es.eigenvectors() * clamped.cwiseSqrt().asDiagonal();
}

Eigen::VectorXd GaussianSampler::draw(Rng& rng) const {
  Eigen::VectorXd z(factor_.cols());
  for (int i = 0; i < z.size(); ++i) z(i) = rng.normal();
  return factor_ * z;
}

}  // namespace lqioc
