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

#include "lqioc/oracle/qp_forward.hpp"

#include "lqioc/common.hpp"

namespace lqioc::oracle {

// Decision vector z = (x_{s+1}, ..., x_{last}, u_s, ..., u_{last-1}) with the
// start state fixed. Cost: 1/2 sum_t (x_t - r_t)' Q (x_t - r_t) over
// t = s..last plus 1/2 sum |u_t|^2; the start-state term is constant and
// dropped. Constraints: x_{t+1} - A x_t - B u_t = 0.
QpForwardResult qp_forward_solve(const DiscreteLTI& sys,
                                 const CostParams& cost,
                                 const ReferenceSignal& ref,
                                 const Eigen::VectorXd& x_start, int N) {
  sys.validate();
  cost.validate();
  ref.validate();
  const int T = ref.total_steps();
  require(N >= 1 && N <= T, "horizon out of range");
  require(x_start.size() == sys.n(), "start state dimension mismatch");
  require(cost.n() == sys.n() && ref.n() == sys.n(), "dimension mismatch");

  const int n = sys.n();
  const int m = sys.m();
  const int s = T - N;

  Trajectory tr;
  tr.total_steps = T;
  tr.N = N;
  tr.ref_id = ref.id;
  tr.states.push_back(x_start);
  if (N == 1) return {tr, 0.0};

  const int steps = N - 1;            // transitions
  const int nx = n * steps;           // stacked states x_{s+1..last}
  const int nu = m * steps;           // stacked inputs u_{s..last-1}
  const int nz = nx + nu;
  const int nc = n * steps;           // dynamics rows

  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(nz + nc, nz + nc);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nz + nc);

  // Hessian: Q per stacked state, identity per stacked input.
  for (int k = 0; k < steps; ++k)
    kkt.block(k * n, k * n, n, n) = cost.Q;
  kkt.block(nx, nx, nu, nu).setIdentity();

  // Linear term: -Q r_t for each decided state.
  for (int k = 0; k < steps; ++k)
    rhs.segment(k * n, n) = cost.Q * ref.samples[s + 1 + k];

  // Dynamics x_{t+1} = A x_t + B u_t, t = s..last-1; x_s enters the rhs.
  for (int k = 0; k < steps; ++k) {
    const int r = nz + k * n;
    kkt.block(r, k * n, n, n) = Eigen::MatrixXd::Identity(n, n);
    if (k > 0) kkt.block(r, (k - 1) * n, n, n) = -sys.A;
    kkt.block(r, nx + k * m, n, m) = -sys.B;
    // Symmetric counterpart.
    kkt.block(k * n, r, n, n) = Eigen::MatrixXd::Identity(n, n);
    if (k > 0) kkt.block((k - 1) * n, r, n, n) = -sys.A.transpose();
    kkt.block(nx + k * m, r, m, n) = -sys.B.transpose();
  }
  rhs.segment(nz, n) = sys.A * x_start;

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(kkt);
  const Eigen::VectorXd sol = lu.solve(rhs);
  const double res = (kkt * sol - rhs).norm() / (1.0 + rhs.norm());
  numeric_check(res < 1e-6, "stacked KKT system is numerically singular");

  for (int k = 0; k < steps; ++k) tr.states.push_back(sol.segment(k * n, n));
  for (int k = 0; k < steps; ++k)
    tr.controls.push_back(sol.segment(nx + k * m, m));
  tr.validate();
  return {tr, res};
}

}  // namespace lqioc::oracle
