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

#ifndef LQIOC_NOISE_HPP_
#define LQIOC_NOISE_HPP_

#include <Eigen/Dense>

#include "lqioc/rng.hpp"

namespace lqioc {

// Zero-mean process noise entering through the input channel, so the
// covariance is m x m.
struct NoiseModel {
  Eigen::MatrixXd sigma_w;

  int m() const { return static_cast<int>(sigma_w.rows()); }
  void validate(double psd_tol = 1e-12) const;

  static NoiseModel zero(int m) {
    return NoiseModel{Eigen::MatrixXd::Zero(m, m)};
  }
  bool is_zero() const { return sigma_w.isZero(0.0); }
};

// Draws w ~ N(0, sigma_w). The factor is taken once from a symmetric
// eigendecomposition so singular (including zero) covariances are fine.
class GaussianSampler {
 public:
  explicit GaussianSampler(const NoiseModel& noise);
  Eigen::VectorXd draw(Rng& rng) const;

 private:
  Eigen::MatrixXd factor_;  // sigma_w = factor_ * factor_^T
};

}  // namespace lqioc

#endif  // LQIOC_NOISE_HPP_
