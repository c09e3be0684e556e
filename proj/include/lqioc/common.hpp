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

#ifndef LQIOC_COMMON_HPP_
#define LQIOC_COMMON_HPP_

#include <Eigen/Dense>

#include <cstdio>
#include <stdexcept>
#include <string>

namespace lqioc {

// Thrown on malformed user input (configs, files, CLI arguments).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a computation breaks down numerically (overflow, failed
// factorization, symmetry drift past tolerance).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline void numeric_check(bool cond, const std::string& msg) {
  if (!cond) throw NumericError(msg);
}

inline bool all_finite(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  return m.allFinite();
}

inline Eigen::MatrixXd symmetrized(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  return 0.5 * (m + m.transpose());
}

inline double asymmetry(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  return (m - m.transpose()).cwiseAbs().maxCoeff();
}

inline double min_eigenvalue(const Eigen::Ref<const Eigen::MatrixXd>& sym) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(symmetrized(sym),
                                                    Eigen::EigenvaluesOnly);
  numeric_check(es.info() == Eigen::Success, "eigendecomposition failed");
  return es.eigenvalues().minCoeff();
}

// Shortest text that round-trips a double exactly; used for every float we
// persist so repeated runs are byte-identical.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

}  // namespace lqioc

#endif  // LQIOC_COMMON_HPP_
