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

#ifndef LQIOC_ORACLE_DIRECT_SEARCH_HPP_
#define LQIOC_ORACLE_DIRECT_SEARCH_HPP_

#include <map>
#include <string>
#include <vector>

#include "lqioc/objective.hpp"

namespace lqioc::oracle {

// Candidate grids. Every candidate is positive semidefinite by construction:
// explicit matrices are validated, factored grids build Q = L L' from ranges
// of lower-triangular entries, scaled grids use c * I.
struct GridSpec {
  std::vector<Eigen::MatrixXd> explicit_candidates;

  struct Range {
    double lo = 0.0;
    double hi = 0.0;
    int count = 1;
  };
  // Lower-triangular factor ranges in column-major order (n(n+1)/2 of them);
  // empty when unused.
  std::vector<Range> factor_ranges;
  int factor_dim = 0;

  static GridSpec scaled_identity(int n, const std::vector<double>& scales);
  std::vector<Eigen::MatrixXd> materialize() const;
};

struct DirectSearchResult {
  Eigen::MatrixXd Q;
  int grid_index = 0;
  double objective = 0.0;
  std::vector<double> objectives;  // per candidate, grid order
};

// Restricted search: every candidate's recursion-generated chain is feasible,
// so minimizing the data objective over the grid bounds the estimator from
// above. Ties break toward the earliest grid index.
DirectSearchResult direct_search_estimator(
    const DiscreteLTI& sys, const Dataset& ds,
    const std::map<std::string, ReferenceSignal>& refs,
    const NoiseModel& noise, const GridSpec& grid);

}  // namespace lqioc::oracle

#endif  // LQIOC_ORACLE_DIRECT_SEARCH_HPP_
