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

#ifndef LQIOC_CONIC_PROGRAM_HPP_
#define LQIOC_CONIC_PROGRAM_HPP_

#include <Eigen/Sparse>

#include <iosfwd>
#include <string>
#include <vector>

#include "lqioc/conic/cones.hpp"

namespace lqioc::conic {

// Standard-form cone program
//     minimize    c' x
//     subject to  Aeq x = b,   x in K,
// where K is the product of the listed cone blocks, covering the variable
// vector exactly in order.
struct ConicProgram {
  Eigen::VectorXd c;
  Eigen::SparseMatrix<double> Aeq;  // rows x cols, cols == c.size()
  Eigen::VectorXd b;
  std::vector<Cone> cones;

  int cols() const { return static_cast<int>(c.size()); }
  int rows() const { return static_cast<int>(b.size()); }
  void validate() const;
};

enum class SolveStatus { Optimal, MaxIter, Infeasible, Unbounded };
std::string status_name(SolveStatus s);

struct ConicSolution {
  Eigen::VectorXd x;  // cone-feasible primal point
  Eigen::VectorXd y;  // equality multipliers; dual slack is c + Aeq' y
  SolveStatus status = SolveStatus::MaxIter;
  int iterations = 0;
  // Scaled norms on the original (unscaled) data:
  //   primal_residual = |Aeq x - b| / (1 + |b|)
  //   dual_residual   = |c + Aeq' y - s| / (1 + |c|),  s = proj_{K*} slack
  //   gap             = |c' x + b' y| / (1 + |c' x| + |b' y|)
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double gap = 0.0;
};

// Text serialization of (c, Aeq triplets, b, cones) for debugging and for
// replaying a program in other solvers.
void dump_program(const ConicProgram& p, std::ostream& os);
void dump_program(const ConicProgram& p, const std::string& path);

}  // namespace lqioc::conic

#endif  // LQIOC_CONIC_PROGRAM_HPP_
