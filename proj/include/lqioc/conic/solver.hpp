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

#ifndef LQIOC_CONIC_SOLVER_HPP_
#define LQIOC_CONIC_SOLVER_HPP_

#include "lqioc/conic/program.hpp"

namespace lqioc::conic {

struct SolverSettings {
  double tol = 1e-7;
  int max_iter = 100000;
  double rho = 1.0;           // penalty of the splitting
  double alpha = 1.6;         // over-relaxation in (0, 2)
  int check_interval = 25;    // residual evaluation cadence
  int infeas_warmup = 500;    // iterations before divergence tests run
  double tol_infeas = 1e-7;   // certificate acceptance threshold
  int ruiz_iters = 10;        // equilibration passes over Aeq
  bool verbose = false;
};

// Operator-splitting solve. Each iteration alternates a projection onto the
// affine set {Aeq x = b} (one cached factorization of Aeq Aeq', reused
// throughout) with blockwise cone projections and a dual ascent step.
// Equilibration changes the iterates, not the fixed points; all reported
// residuals are recomputed on the original data. A solve is single-threaded
// and bit-reproducible for identical inputs.
ConicSolution solve_conic(const ConicProgram& p, const SolverSettings& s = {});

inline ConicSolution solve_conic(const ConicProgram& p, double tol,
                                 int max_iter) {
  SolverSettings s;
  s.tol = tol;
  s.max_iter = max_iter;
  return solve_conic(p, s);
}

}  // namespace lqioc::conic

#endif  // LQIOC_CONIC_SOLVER_HPP_
