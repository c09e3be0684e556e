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

#ifndef LQIOC_REFERENCE_HPP_
#define LQIOC_REFERENCE_HPP_

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "lqioc/lti.hpp"

namespace lqioc {

// Tracking target: one state sample per step, indices 0..total_steps-1.
struct ReferenceSignal {
  std::string id;
  std::vector<Eigen::VectorXd> samples;

  int total_steps() const { return static_cast<int>(samples.size()); }
  int n() const { return samples.empty() ? 0 : static_cast<int>(samples[0].size()); }
  void validate() const;
};

// Input waveforms used to roll a reference through the plant dynamics.
struct ReferenceInput {
  enum class Kind { Zero, Sine, Cosine, Custom };
  Kind kind = Kind::Zero;
  double amplitude = 0.0;
  double omega = 0.0;                      // radians per step, Sine/Cosine
  std::vector<Eigen::VectorXd> custom;     // length total_steps-1, Custom

  // Input at step t (1-based, matching u applied between samples t and t+1).
  Eigen::VectorXd at(int t, int m) const;
};

// Rolls x_{t+1} = A x_t + B u_t from x1 for total_steps samples.
ReferenceSignal generate_reference(const DiscreteLTI& sys,
                                   const Eigen::VectorXd& x1,
                                   const ReferenceInput& input,
                                   int total_steps, const std::string& id);

}  // namespace lqioc

#endif  // LQIOC_REFERENCE_HPP_
