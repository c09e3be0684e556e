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

#ifndef LQIOC_ESTIMATOR_HPP_
#define LQIOC_ESTIMATOR_HPP_

#include "lqioc/lowering.hpp"

namespace lqioc {

// Constraint residuals of a candidate point. Eigenvalue fields are minima
// over every block and step; a feasible point has them above -tol_psd and
// the equality residuals below tol_eq.
struct FeasibilityReport {
  double min_H_eig = 0.0;
  double min_P_eig = 0.0;
  double min_Q_eig = 0.0;
  double max_schur_norm = 0.0;       // |H_t after eliminating the input block|
  double max_terminal_eta_res = 0.0; // |eta_last + Q r_last|
  double max_terminal_P_res = 0.0;   // |P_last - Q|_F
  double frobenius_slack = 0.0;      // phi - |Q|_F
  bool passed = false;
};

FeasibilityReport feasibility_check(
    const DiscreteLTI& sys, const std::map<std::string, ReferenceSignal>& refs,
    const CandidatePoint& point, const EstimatorConfig& cfg);

struct IOCSolution {
  Eigen::MatrixXd Q_est;  // PSD-projected when the raw minimum eigenvalue
                          // sits inside (-tol_psd, 0)
  Eigen::MatrixXd Q_raw;  // exactly as returned by the solver
  std::map<std::string, CertificateChain> chains;
  // Linear cost terms implied by Q_est, one sequence per reference.
  std::map<std::string, std::vector<Eigen::VectorXd>> q;
  double objective_value = 0.0;
  conic::SolveStatus status = conic::SolveStatus::MaxIter;
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double gap = 0.0;
  FeasibilityReport feasibility;
  double excitation_min_eig = -1.0;
  std::vector<std::string> diagnostics;

  bool ok() const {
    return status == conic::SolveStatus::Optimal && feasibility.passed;
  }
  CandidatePoint as_point() const { return CandidatePoint{Q_est, chains}; }
};

// Assembles the program for `ds`, solves it, and extracts the estimate with
// its residual report. Solver failures are reported in `status`, not thrown.
IOCSolution solve_ioc(const DiscreteLTI& sys, const Dataset& ds,
                      const std::map<std::string, ReferenceSignal>& refs,
                      const NoiseModel& noise, const EstimatorConfig& cfg);

}  // namespace lqioc

#endif  // LQIOC_ESTIMATOR_HPP_
