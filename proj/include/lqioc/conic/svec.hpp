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

#ifndef LQIOC_CONIC_SVEC_HPP_
#define LQIOC_CONIC_SVEC_HPP_

#include <Eigen/Dense>

namespace lqioc::conic {

// Symmetric vectorization. Ordering is the lower triangle walked column by
// column: (0,0), (1,0), ..., (s-1,0), (1,1), (2,1), ... Off-diagonal entries
// are scaled by sqrt(2), which makes the map an isometry:
//   svec(S) . svec(T) = <S, T>_F   and   |svec(S)| = |S|_F.

inline int svec_dim(int s) { return s * (s + 1) / 2; }

// Side length from a packed dimension; -1 when d is not triangular.
int svec_side(int d);

Eigen::VectorXd svec(const Eigen::Ref<const Eigen::MatrixXd>& S,
                     double sym_tol = 1e-9);
Eigen::MatrixXd smat(const Eigen::Ref<const Eigen::VectorXd>& v);

}  // namespace lqioc::conic

#endif  // LQIOC_CONIC_SVEC_HPP_
