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

#ifndef LQIOC_RICCATI_HPP_
#define LQIOC_RICCATI_HPP_

#include <Eigen/Dense>

#include <vector>

#include "lqioc/cost.hpp"
#include "lqioc/lti.hpp"
#include "lqioc/reference.hpp"

namespace lqioc {

// Value-function chain of the finite-horizon tracking problem, indexed by
// absolute time 0..total_steps-1 (0-based throughout; slot t is the t+1-th
// sample of the reference). Because the terminal condition sits at the last
// step, one chain serves every planning-horizon length: a horizon-N
// trajectory simply starts reading at slot total_steps-N.
//
//   P[last]  = Q                       eta[last]  = -Q r[last]
//   P[t]     = A'P[t+1]A + Q - A'P[t+1]B (B'P[t+1]B + I)^{-1} B'P[t+1]A
//   eta[t]   = (A - B K[t])' eta[t+1] - Q r[t]
//
// with gains K[t] = (B'P[t+1]B + I)^{-1} B'P[t+1]A and feedforward
// kff[t] = (B'P[t+1]B + I)^{-1} B'eta[t+1], both defined for
// t = 0..total_steps-2. The certificate scalars close the chain's LMI
// blocks: xi_cert[t] = g' (B'P[t+1]B + I)^{-1} g with g = B'eta[t+1].
struct RiccatiBundle {
  std::vector<Eigen::MatrixXd> P;
  std::vector<Eigen::VectorXd> eta;
  std::vector<Eigen::MatrixXd> K;
  std::vector<Eigen::VectorXd> kff;
  std::vector<double> xi_cert;

  int total_steps() const { return static_cast<int>(P.size()); }
  int n() const { return P.empty() ? 0 : static_cast<int>(P[0].rows()); }
};

// Backward recursion from the terminal step. Each P is symmetrized after its
// update; drift beyond `sym_tol` raises NumericError.
RiccatiBundle riccati(const DiscreteLTI& sys, const CostParams& cost,
                      const ReferenceSignal& ref, double sym_tol = 1e-8);

// Feedback law u = -K[t] x - kff[t]; t in [0, total_steps-2].
Eigen::VectorXd optimal_input(const RiccatiBundle& bundle, int t,
                              const Eigen::VectorXd& x);

}  // namespace lqioc

#endif  // LQIOC_RICCATI_HPP_
