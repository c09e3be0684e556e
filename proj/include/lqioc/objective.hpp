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

#ifndef LQIOC_OBJECTIVE_HPP_
#define LQIOC_OBJECTIVE_HPP_

#include <map>
#include <string>
#include <vector>

#include "lqioc/lti.hpp"
#include "lqioc/noise.hpp"
#include "lqioc/riccati.hpp"
#include "lqioc/trajectory.hpp"

namespace lqioc {

// One (P, eta, xi) sequence over absolute time, belonging to one reference.
struct CertificateChain {
  std::vector<Eigen::MatrixXd> P;    // total_steps entries
  std::vector<Eigen::VectorXd> eta;  // total_steps entries
  Eigen::VectorXd xi;                // total_steps - 1 entries

  int total_steps() const { return static_cast<int>(P.size()); }
};

// The chain generated by the backward recursion for a given Q; feasible for
// the estimation program by construction.
CertificateChain chain_from_bundle(const RiccatiBundle& bundle);

// A point of the estimation program: the shared cost matrix plus one chain
// per reference signal.
struct CandidatePoint {
  Eigen::MatrixXd Q;
  std::map<std::string, CertificateChain> chains;
};

// The data-weighted linear functional that the estimator minimizes, stored
// as inner-product coefficients per variable group. The linear cost terms
// q_t = -Q r_t are already folded into C_Q, so evaluation assumes candidates
// satisfy that tie.
struct ChainCoefficients {
  std::vector<Eigen::MatrixXd> C_P;    // on P_t, t = 0..total_steps-1
  std::vector<Eigen::VectorXd> c_eta;  // on eta_t
  Eigen::VectorXd c_xi;                // on xi_t, t = 0..total_steps-2
};

struct ObjectiveCoefficients {
  Eigen::MatrixXd C_Q;
  std::map<std::string, ChainCoefficients> chains;
  int total_steps = 0;
  int n = 0;
};

// Extracts the coefficients from observed states. Every trajectory
// contributes, scaled by 1/M:
//   terminal step:  +1/2 x x' on P_last, +x on eta_last
//   start step:     -1/2 x x' on P_s,    -x on eta_s
//   each active t:  +1/2 on xi_t, +1/2 x x' - sym(x r') on Q (q-fold),
//                   -1/2 B sigma_w B' on P_{t+1}
ObjectiveCoefficients assemble_objective(
    const DiscreteLTI& sys, const Dataset& ds,
    const std::map<std::string, ReferenceSignal>& refs,
    const NoiseModel& noise);

double evaluate_objective(const ObjectiveCoefficients& coeffs,
                          const CandidatePoint& point);

// Convenience: assemble then evaluate.
double evaluate_objective(const DiscreteLTI& sys, const Dataset& ds,
                          const std::map<std::string, ReferenceSignal>& refs,
                          const NoiseModel& noise,
                          const CandidatePoint& point);

}  // namespace lqioc

#endif  // LQIOC_OBJECTIVE_HPP_
