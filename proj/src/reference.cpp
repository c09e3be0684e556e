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

#include "lqioc/reference.hpp"

#include <cmath>

#include "lqioc/common.hpp"

namespace lqioc {

void ReferenceSignal::validate() const {
  require(!samples.empty(), "reference has no samples");
  const auto dim = samples[0].size();
  for (const auto& s : samples) {
    require(s.size() == dim, "reference samples have inconsistent dimension");
    require(s.allFinite(), "reference has non-finite entries");
  }
}

Eigen::VectorXd ReferenceInput::at(int t, int m) const {
  switch (kind) {
    case Kind::Zero:
      return Eigen::VectorXd::Zero(m);
    case Kind::Sine:
      return Eigen::VectorXd::Constant(m, amplitude * std::sin(omega * t));
    case Kind::Cosine:
      return Eigen::VectorXd::Constant(m, amplitude * std::cos(omega * t));
    case Kind::Custom:
      require(t >= 1 && t <= static_cast<int>(custom.size()),
              "custom reference input index out of range");
      return custom[t - 1];
  }
  return Eigen::VectorXd::Zero(m);
}

ReferenceSignal generate_reference(const DiscreteLTI& sys,
                                   const Eigen::VectorXd& x1,
                                   const ReferenceInput& input,
                                   int total_steps, const std::string& id) {
  require(total_steps >= 1, "reference length must be positive");
  require(x1.size() == sys.n(), "initial reference state dimension mismatch");
  if (input.kind == ReferenceInput::Kind::Custom) {
    require(static_cast<int>(input.custom.size()) >= total_steps - 1,
            "custom reference input too short");
    for (const auto& u : input.custom)
      require(u.size() == sys.m(), "custom reference input dimension mismatch");
  }

  ReferenceSignal ref;
  ref.id = id;
  ref.samples.reserve(total_steps);
  Eigen::VectorXd x = x1;
  ref.samples.push_back(x);
  for (int t = 1; t < total_steps; ++t) {
    x = sys.A * x + sys.B * input.at(t, sys.m());
    ref.samples.push_back(x);
  }
  ref.validate();
  return ref;
}

}  // namespace lqioc
