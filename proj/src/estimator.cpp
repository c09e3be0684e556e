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

#include "lqioc/estimator.hpp"

#include <algorithm>
#include <limits>

#include "lqioc/common.hpp"
#include "lqioc/cost.hpp"

namespace lqioc {

namespace {

// LMI block of one step, evaluated at a concrete point.
Eigen::MatrixXd lmi_block(const DiscreteLTI& sys, const Eigen::MatrixXd& Q,
                          const CertificateChain& chain,
                          const Eigen::VectorXd& r_t, int t) {
  const int n = sys.n();
  const int m = sys.m();
  const auto& A = sys.A;
  const auto& B = sys.B;
  const Eigen::MatrixXd& Pn = chain.P[t + 1];

  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(m + n + 1, m + n + 1);
  H.topLeftCorner(m, m) =
      B.transpose() * Pn * B + Eigen::MatrixXd::Identity(m, m);
  H.block(0, m, m, n) = B.transpose() * Pn * A;
  H.block(m, 0, n, m) = H.block(0, m, m, n).transpose();
  H.block(m, m, n, n) = A.transpose() * Pn * A + Q - chain.P[t];
  const Eigen::VectorXd g = B.transpose() * chain.eta[t + 1];
  const Eigen::VectorXd beta =
      -Q * r_t + A.transpose() * chain.eta[t + 1] - chain.eta[t];
  H.block(0, m + n, m, 1) = g;
  H.block(m + n, 0, 1, m) = g.transpose();
  H.block(m, m + n, n, 1) = beta;
  H.block(m + n, m, 1, n) = beta.transpose();
  H(m + n, m + n) = chain.xi(t);
  return H;
}

}  // namespace

FeasibilityReport feasibility_check(
    const DiscreteLTI& sys, const std::map<std::string, ReferenceSignal>& refs,
    const CandidatePoint& point, const EstimatorConfig& cfg) {
  const int m = sys.m();
  const int n = sys.n();
  FeasibilityReport rep;
  rep.min_Q_eig = min_eigenvalue(point.Q);
  rep.min_P_eig = std::numeric_limits<double>::infinity();
  rep.min_H_eig = std::numeric_limits<double>::infinity();
  rep.frobenius_slack = cfg.phi - point.Q.norm();

  for (const auto& [ref_id, chain] : point.chains) {
    auto it = refs.find(ref_id);
    require(it != refs.end(), "no reference named '" + ref_id + "'");
    const ReferenceSignal& ref = it->second;
    const int T = chain.total_steps();
    require(ref.total_steps() == T, "chain/reference length mismatch");

    for (int t = 0; t < T; ++t)
      rep.min_P_eig = std::min(rep.min_P_eig, min_eigenvalue(chain.P[t]));

    for (int t = 0; t < T - 1; ++t) {
      const Eigen::MatrixXd H = lmi_block(sys, point.Q, chain, ref.samples[t], t);
      rep.min_H_eig = std::min(rep.min_H_eig, min_eigenvalue(H));
      // Schur complement with respect to the input block; zero exactly on
      // recursion-generated chains.
      const Eigen::MatrixXd Ru = H.topLeftCorner(m, m);
      const Eigen::MatrixXd off = H.topRightCorner(m, n + 1);
      const Eigen::MatrixXd schur =
          H.bottomRightCorner(n + 1, n + 1) -
          off.transpose() * Ru.ldlt().solve(off);
      rep.max_schur_norm = std::max(rep.max_schur_norm, schur.norm());
    }
    rep.max_terminal_P_res =
        std::max(rep.max_terminal_P_res, (chain.P[T - 1] - point.Q).norm());
    rep.max_terminal_eta_res = std::max(
        rep.max_terminal_eta_res,
        (chain.eta[T - 1] + point.Q * ref.samples[T - 1]).norm());
  }

  rep.passed = rep.min_Q_eig >= -cfg.tol_psd && rep.min_P_eig >= -cfg.tol_psd &&
               rep.min_H_eig >= -cfg.tol_psd &&
               rep.max_terminal_P_res <= cfg.tol_eq &&
               rep.max_terminal_eta_res <= cfg.tol_eq &&
               rep.frobenius_slack >= -cfg.tol_eq;
  return rep;
}

IOCSolution solve_ioc(const DiscreteLTI& sys, const Dataset& ds,
                      const std::map<std::string, ReferenceSignal>& refs,
                      const NoiseModel& noise, const EstimatorConfig& cfg) {
  LoweredProgram lowered = assemble_program(sys, ds, refs, noise, cfg);
  const conic::ConicSolution sol = conic::solve_conic(lowered.program,
                                                      cfg.solver);

  IOCSolution out;
  out.status = sol.status;
  out.iterations = sol.iterations;
  out.primal_residual = sol.primal_residual;
  out.dual_residual = sol.dual_residual;
  out.gap = sol.gap;
  out.excitation_min_eig = lowered.excitation_min_eig;
  out.diagnostics = lowered.diagnostics;

  if (sol.x.size() != lowered.program.cols()) return out;  // nothing usable

  CandidatePoint point = extract_candidate(lowered.layout, sol.x);
  out.Q_raw = point.Q;
  out.chains = point.chains;

  // Clamp a slightly indefinite Q back onto the cone for reporting; the raw
  // matrix stays available. Larger violations are left for the feasibility
  // report to flag.
  const double qmin = min_eigenvalue(point.Q);
  if (qmin < 0.0 && qmin > -cfg.tol_psd) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(symmetrized(point.Q));
    out.Q_est = es.eigenvectors() *
                es.eigenvalues().cwiseMax(0.0).asDiagonal() *
                es.eigenvectors().transpose();
  } else {
    out.Q_est = symmetrized(point.Q);
  }

  out.feasibility = feasibility_check(sys, refs, point, cfg);
  out.objective_value =
      evaluate_objective(sys, ds, refs, noise, point);
  for (const auto& [ref_id, ref] : refs) {
    CostParams est{out.Q_est};
    out.q.emplace(ref_id, tracking_to_linear(est, ref));
  }
  return out;
}

}  // namespace lqioc
