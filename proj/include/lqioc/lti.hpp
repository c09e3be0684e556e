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

#ifndef LQIOC_LTI_HPP_
#define LQIOC_LTI_HPP_

#include <Eigen/Dense>

namespace lqioc {

// Continuous-time plant xdot = A_hat x + B_hat u.
struct ContinuousLTI {
  Eigen::MatrixXd A_hat;
  Eigen::MatrixXd B_hat;

  int n() const { return static_cast<int>(A_hat.rows()); }
  int m() const { return static_cast<int>(B_hat.cols()); }
  void validate() const;
};

// Discrete-time plant x_{t+1} = A x_t + B u_t. Valid instances have an
// invertible A, a full-column-rank B, and a controllable pair (A, B).
struct DiscreteLTI {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  double dt = 0.0;  // sampling period in seconds; 0 when unknown

  int n() const { return static_cast<int>(A.rows()); }
  int m() const { return static_cast<int>(B.cols()); }

  // Throws std::invalid_argument when a structural invariant fails.
  // `cond_tol` bounds the inverse condition number of A below.
  void validate(double cond_tol = 1e-12) const;
};

// Zero-order-hold discretization via the exponential of the augmented block
// matrix [[A_hat, B_hat], [0, 0]] * dt, whose top rows are [A, B].
DiscreteLTI discretize(const ContinuousLTI& cont, double dt);

// Rank of [B, AB, ..., A^{n-1}B] equals n.
bool is_controllable(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                     double rank_tol = 1e-9);

}  // namespace lqioc

#endif  // LQIOC_LTI_HPP_
