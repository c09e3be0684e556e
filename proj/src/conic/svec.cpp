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

#include "lqioc/conic/svec.hpp"

#include <cmath>

#include "lqioc/common.hpp"

namespace lqioc::conic {

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

int svec_side(int d) {
  const int s = static_cast<int>((std::sqrt(8.0 * d + 1.0) - 1.0) / 2.0 + 0.5);
  return svec_dim(s) == d ? s : -1;
}

Eigen::VectorXd svec(const Eigen::Ref<const Eigen::MatrixXd>& S,
                     double sym_tol) {
  const int s = static_cast<int>(S.rows());
  require(S.cols() == s, "svec input must be square");
  require(asymmetry(S) <= sym_tol * (1.0 + S.cwiseAbs().maxCoeff()),
          "svec input is not symmetric");
  Eigen::VectorXd v(svec_dim(s));
  int k = 0;
  for (int j = 0; j < s; ++j) {
    v(k++) = S(j, j);
    for (int i = j + 1; i < s; ++i) v(k++) = kSqrt2 * 0.5 * (S(i, j) + S(j, i));
  }
  return v;
}

Eigen::MatrixXd smat(const Eigen::Ref<const Eigen::VectorXd>& v) {
  const int s = svec_side(static_cast<int>(v.size()));
  require(s > 0, "smat input length is not triangular");
  Eigen::MatrixXd S(s, s);
  int k = 0;
  for (int j = 0; j < s; ++j) {
    S(j, j) = v(k++);
    for (int i = j + 1; i < s; ++i) {
      S(i, j) = v(k) / kSqrt2;
      S(j, i) = S(i, j);
      ++k;
    }
  }
  return S;
}

}  // namespace lqioc::conic
