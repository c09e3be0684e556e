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

#ifndef LQIOC_NOISE_ESTIMATION_HPP_
#define LQIOC_NOISE_ESTIMATION_HPP_

#include "lqioc/lti.hpp"
#include "lqioc/noise.hpp"
#include "lqioc/trajectory.hpp"

namespace lqioc {

struct NoiseEstimate {
  NoiseModel model;
  Eigen::VectorXd mean;
  int sample_count = 0;
};

struct NoiseEstimationOptions {
  int min_samples = 2;
  // Consecutive pairs to drop at the head of each trajectory before the
  // tracking settles; how long that takes depends on the protocol, so it is
  // a knob rather than a built-in constant.
  int skip_initial = 0;
};

// Recovers noise realizations from steady near-zero-input tracking data as
// w_t = pinv(B) (x_{t+1} - A x_t) and returns their sample covariance, with
// the sample mean reported for diagnostics.
NoiseEstimate estimate_noise_covariance(
    const Dataset& ds, const DiscreteLTI& sys,
    const NoiseEstimationOptions& opts = {});

}  // namespace lqioc

#endif  // LQIOC_NOISE_ESTIMATION_HPP_
