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

#include "lqioc/cost.hpp"

#include "lqioc/common.hpp"

namespace lqioc {

void CostParams::validate(double psd_tol, double sym_tol,
                          double frobenius_cap) const {
  require(Q.rows() == Q.cols(), "Q must be square");
  require(all_finite(Q), "Q has non-finite entries");
  require(asymmetry(Q) <= sym_tol * (1.0 + Q.cwiseAbs().maxCoeff()),
          "Q is not symmetric");
  require(min_eigenvalue(Q) >= -psd_tol, "Q is not positive semidefinite");
  if (frobenius_cap > 0.0)
    require(Q.norm() <= frobenius_cap + 1e-12,
            "Q exceeds the Frobenius-norm cap");
}

std::vector<Eigen::VectorXd> tracking_to_linear(const CostParams& cost,
                                                const ReferenceSignal& ref) {
  require(cost.n() == ref.n(), "cost/reference dimension mismatch");
  std::vector<Eigen::VectorXd> q;
  q.reserve(ref.samples.size());
  for (const auto& r : ref.samples) q.push_back(-cost.Q * r);
  return q;
}

}  // namespace lqioc
