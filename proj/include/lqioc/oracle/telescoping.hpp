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

#ifndef LQIOC_ORACLE_TELESCOPING_HPP_
#define LQIOC_ORACLE_TELESCOPING_HPP_

#include "lqioc/noise.hpp"
#include "lqioc/objective.hpp"
#include "lqioc/reference.hpp"
#include "lqioc/trajectory.hpp"

namespace lqioc::oracle {

// Consistency probe for one trajectory against one chain. The per-step sum
// is evaluated two ways: once with the stored next state (which telescopes
// to the boundary terms) and once with the next state re-propagated from the
// stored control. On noise-free data that satisfies the dynamics exactly the
// two agree to rounding; a corrupted state or a dynamics mismatch shows up
// as a large gap.
double telescoping_check(const DiscreteLTI& sys, const Trajectory& traj,
                         const Eigen::MatrixXd& Q,
                         const CertificateChain& chain,
                         const ReferenceSignal& ref, const NoiseModel& noise);

}  // namespace lqioc::oracle

#endif  // LQIOC_ORACLE_TELESCOPING_HPP_
