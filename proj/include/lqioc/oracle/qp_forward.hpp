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

#ifndef LQIOC_ORACLE_QP_FORWARD_HPP_
#define LQIOC_ORACLE_QP_FORWARD_HPP_

#include "lqioc/cost.hpp"
#include "lqioc/trajectory.hpp"

namespace lqioc::oracle {

// Deterministic finite-horizon tracking solved as one stacked equality-
// constrained quadratic program over (states, inputs), by factoring the KKT
// system directly. Slow but transparent; the closed-loop fast path is
// validated against it.
struct QpForwardResult {
  Trajectory trajectory;
  double kkt_residual = 0.0;  // |KKT * sol - rhs| / (1 + |rhs|)
};

QpForwardResult qp_forward_solve(const DiscreteLTI& sys,
                                 const CostParams& cost,
                                 const ReferenceSignal& ref,
                                 const Eigen::VectorXd& x_start, int N);

}  // namespace lqioc::oracle

#endif  // LQIOC_ORACLE_QP_FORWARD_HPP_
