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

#include "lqioc/riccati.hpp"

#include "lqioc/common.hpp"

namespace lqioc {

RiccatiBundle riccati(const DiscreteLTI& sys, const CostParams& cost,
                      const ReferenceSignal& ref, double sym_tol) {
  sys.validate();
  cost.validate();
  ref.validate();
  require(cost.n() == sys.n() && ref.n() == sys.n(),
          "system/cost/reference dimension mismatch");

  const int steps = ref.total_steps();
  const int n = sys.n();
  const int m = sys.m();
  const auto& A = sys.A;
  const auto& B = sys.B;
  const std::vector<Eigen::VectorXd> q = tracking_to_linear(cost, ref);

  RiccatiBundle out;
  out.P.assign(steps, Eigen::MatrixXd());
  out.eta.assign(steps, Eigen::VectorXd());
  out.K.assign(steps - 1, Eigen::MatrixXd());
  out.kff.assign(steps - 1, Eigen::VectorXd());
  out.xi_cert.assign(steps - 1, 0.0);

  out.P[steps - 1] = symmetrized(cost.Q);
  out.eta[steps - 1] = q[steps - 1];

  for (int t = steps - 2; t >= 0; --t) {
    const Eigen::MatrixXd& Pn = out.P[t + 1];
    const Eigen::MatrixXd Ru = B.transpose() * Pn * B +
                               Eigen::MatrixXd::Identity(m, m);
    Eigen::LLT<Eigen::MatrixXd> llt(symmetrized(Ru));
    numeric_check(llt.info() == Eigen::Success,
                  "B'PB + I lost positive definiteness");

    const Eigen::MatrixXd Sux = B.transpose() * Pn * A;   // m x n
    const Eigen::VectorXd g = B.transpose() * out.eta[t + 1];

    out.K[t] = llt.solve(Sux);
    out.kff[t] = llt.solve(g);
    out.xi_cert[t] = g.dot(llt.solve(g));

    Eigen::MatrixXd P = A.transpose() * Pn * A + cost.Q -
                        Sux.transpose() * out.K[t];
    numeric_check(asymmetry(P) <= sym_tol * (1.0 + P.cwiseAbs().maxCoeff()),
                  "Riccati step lost symmetry beyond tolerance");
    out.P[t] = symmetrized(P);

    out.eta[t] = (A - B * out.K[t]).transpose() * out.eta[t + 1] + q[t];
    numeric_check(all_finite(out.P[t]) && out.eta[t].allFinite(),
                  "Riccati recursion diverged");
  }
  return out;
}

Eigen::VectorXd optimal_input(const RiccatiBundle& bundle, int t,
                              const Eigen::VectorXd& x) {
  require(t >= 0 && t < static_cast<int>(bundle.K.size()),
          "control index out of range");
  require(x.size() == bundle.n(), "state dimension mismatch");
  return -bundle.K[t] * x - bundle.kff[t];
}

}  // namespace lqioc
