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

#ifndef LQIOC_CONIC_CONES_HPP_
#define LQIOC_CONIC_CONES_HPP_

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace lqioc::conic {

// Variable-block cones. Psd blocks hold svec'd matrices of the given side.
// Free blocks carry no constraint (their dual is the zero cone); Zero blocks
// pin the variables to 0 (their dual is free).
enum class ConeKind { Zero, Free, NonNeg, Soc, Psd };

struct Cone {
  ConeKind kind;
  int dim;   // vector length of the block
  int side;  // matrix side, Psd only

  static Cone zero(int k) { return {ConeKind::Zero, k, 0}; }
  static Cone free(int k) { return {ConeKind::Free, k, 0}; }
  static Cone nonneg(int k) { return {ConeKind::NonNeg, k, 0}; }
  static Cone soc(int k) { return {ConeKind::Soc, k, 0}; }
  static Cone psd(int side);
};

std::string cone_name(ConeKind kind);

// Euclidean projection of one block onto its cone, in place.
void project_cone(Eigen::Ref<Eigen::VectorXd> v, const Cone& cone);

// Projection onto the dual cone K*, via the Moreau identity
// proj_{K*}(v) = v + proj_K(-v).
void project_dual_cone(Eigen::Ref<Eigen::VectorXd> v, const Cone& cone);

int total_dim(const std::vector<Cone>& cones);

// Within-block uniform scaling keeps Soc and Psd blocks invariant;
// Zero/Free/NonNeg blocks may be scaled per coordinate.
bool scaling_must_be_uniform(ConeKind kind);

}  // namespace lqioc::conic

#endif  // LQIOC_CONIC_CONES_HPP_
