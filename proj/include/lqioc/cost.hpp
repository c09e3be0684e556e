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

#ifndef LQIOC_COST_HPP_
#define LQIOC_COST_HPP_

#include <Eigen/Dense>

#include <vector>

#include "lqioc/reference.hpp"

namespace lqioc {

// State-deviation weight of the tracking cost. The control weight is fixed
// to the identity, so Q is the only cost parameter.
struct CostParams {
  Eigen::MatrixXd Q;

  int n() const { return static_cast<int>(Q.rows()); }

  // Symmetric within `sym_tol`, eigenvalues >= -psd_tol, and (when
  // `frobenius_cap` > 0) Frobenius norm within the cap.
  void validate(double psd_tol = 1e-9, double sym_tol = 1e-9,
                double frobenius_cap = 0.0) const;
};

// Linear cost terms induced by a reference: q_t = -Q * x_t^r, one per sample.
std::vector<Eigen::VectorXd> tracking_to_linear(const CostParams& cost,
                                                const ReferenceSignal& ref);

}  // namespace lqioc

#endif  // LQIOC_COST_HPP_
