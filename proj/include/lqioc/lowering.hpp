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

#ifndef LQIOC_LOWERING_HPP_
#define LQIOC_LOWERING_HPP_

#include <map>
#include <string>
#include <vector>

#include "lqioc/conic/program.hpp"
#include "lqioc/conic/solver.hpp"
#include "lqioc/objective.hpp"

namespace lqioc {

struct EstimatorConfig {
  double phi = 50.0;        // Frobenius-ball radius for Q
  double tol_psd = 1e-7;    // eigenvalue slack accepted as feasible
  double tol_eq = 1e-6;     // equality-residual slack
  double excitation_warn_tol = 1e-8;
  conic::SolverSettings solver;
};

// Where each variable group of the estimation program lives inside the
// stacked conic variable vector. T stands for total_steps; dQ and dH are the
// packed sizes of the n x n and (m+n+1) x (m+n+1) blocks. The terminal value
// matrix and the linear cost terms are substituted out (both are affine in
// Q), so per chain the unknowns are P_0..P_{T-2}, the packed LMI blocks
// H_0..H_{T-2}, eta_0..eta_{T-1}, and xi_0..xi_{T-2}.
struct ChainLayout {
  std::string ref_id;
  int p_offset = 0;    // (T-1) psd blocks of packed size dQ
  int h_offset = 0;    // (T-1) psd blocks of packed size dH
  int eta_offset = 0;  // n*T free entries
  int xi_offset = 0;   // T-1 free entries
};

struct ProgramLayout {
  int n = 0;
  int m = 0;
  int total_steps = 0;
  int q_offset = 0;  // packed Q, first psd block
  std::vector<ChainLayout> chains;
  int soc_offset = 0;  // (radius, copy of packed Q)

  int dQ() const;
  int dH() const;
};

struct LoweredProgram {
  conic::ConicProgram program;
  ProgramLayout layout;
  std::vector<std::string> diagnostics;
  // Smallest eigenvalue of the pooled second-moment matrix of [x; 1] over
  // full-length trajectories; a proxy for excitation. -1 when no full-length
  // trajectory exists.
  double excitation_min_eig = -1.0;
};

// Lowers the estimation problem on `ds` to standard conic form. One chain is
// created per entry of `refs` (all sharing Q), so pass exactly the references
// the data uses.
LoweredProgram assemble_program(const DiscreteLTI& sys, const Dataset& ds,
                                const std::map<std::string, ReferenceSignal>& refs,
                                const NoiseModel& noise,
                                const EstimatorConfig& cfg);

// Reads a candidate point back out of a conic variable vector.
CandidatePoint extract_candidate(const ProgramLayout& layout,
                                 const Eigen::VectorXd& x);

}  // namespace lqioc

#endif  // LQIOC_LOWERING_HPP_
