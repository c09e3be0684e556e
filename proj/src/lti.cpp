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

#include "lqioc/lti.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "lqioc/common.hpp"

namespace lqioc {

void ContinuousLTI::validate() const {
  require(A_hat.rows() == A_hat.cols(), "A_hat must be square");
  require(B_hat.rows() == A_hat.rows(), "A_hat/B_hat row mismatch");
  require(B_hat.cols() >= 1, "B_hat must have at least one column");
  require(all_finite(A_hat) && all_finite(B_hat),
          "continuous system has non-finite entries");
}

bool is_controllable(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                     double rank_tol) {
  const int n = static_cast<int>(A.rows());
  const int m = static_cast<int>(B.cols());
  Eigen::MatrixXd ctrb(n, n * m);
  Eigen::MatrixXd block = B;
  for (int k = 0; k < n; ++k) {
    ctrb.middleCols(k * m, m) = block;
    block = A * block;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(ctrb);
  qr.setThreshold(rank_tol);
  return qr.rank() == n;
}

void DiscreteLTI::validate(double cond_tol) const {
  require(A.rows() == A.cols(), "A must be square");
  require(B.rows() == A.rows(), "A/B row mismatch");
  require(B.cols() >= 1, "B must have at least one column");
  require(all_finite(A) && all_finite(B), "system has non-finite entries");

  Eigen::JacobiSVD<Eigen::MatrixXd> svd_a(A);
  const auto& sv = svd_a.singularValues();
  require(sv(sv.size() - 1) > cond_tol * sv(0),
          "A is singular or too ill-conditioned");

  Eigen::JacobiSVD<Eigen::MatrixXd> svd_b(B);
  const auto& sb = svd_b.singularValues();
  require(sb(sb.size() - 1) > 1e-12 * std::max(1.0, sb(0)),
          "B is rank deficient");

  require(is_controllable(A, B), "(A, B) is not controllable");
}

DiscreteLTI discretize(const ContinuousLTI& cont, double dt) {
  cont.validate();
  require(dt > 0.0, "sampling period must be positive");

  const int n = cont.n();
  const int m = cont.m();
  Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(n + m, n + m);
  aug.topLeftCorner(n, n) = cont.A_hat;
  aug.topRightCorner(n, m) = cont.B_hat;

  const Eigen::MatrixXd e = (aug * dt).exp();
  numeric_check(all_finite(e), "matrix exponential overflowed");

  DiscreteLTI sys;
  sys.A = e.topLeftCorner(n, n);
  sys.B = e.topRightCorner(n, m);
  sys.dt = dt;
  sys.validate();
  return sys;
}

}  // namespace lqioc
