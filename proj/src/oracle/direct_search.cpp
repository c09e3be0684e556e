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

#include "lqioc/oracle/direct_search.hpp"

#include "lqioc/common.hpp"
#include "lqioc/cost.hpp"

namespace lqioc::oracle {

GridSpec GridSpec::scaled_identity(int n, const std::vector<double>& scales) {
  GridSpec g;
  for (double c : scales)
    g.explicit_candidates.push_back(c *
                                    Eigen::MatrixXd::Identity(n, n));
  return g;
}

std::vector<Eigen::MatrixXd> GridSpec::materialize() const {
  std::vector<Eigen::MatrixXd> out = explicit_candidates;
  if (!factor_ranges.empty()) {
    require(factor_dim >= 1, "factor grid needs a dimension");
    const int nf = factor_dim * (factor_dim + 1) / 2;
    require(static_cast<int>(factor_ranges.size()) == nf,
            "factor grid needs one range per lower-triangular entry");
    // Odometer over the per-entry ranges.
    std::vector<int> idx(nf, 0);
    while (true) {
      Eigen::MatrixXd L = Eigen::MatrixXd::Zero(factor_dim, factor_dim);
      int k = 0;
      for (int j = 0; j < factor_dim; ++j) {
        for (int i = j; i < factor_dim; ++i) {
          const Range& r = factor_ranges[k];
          const double v =
              r.count <= 1
                  ? r.lo
                  : r.lo + (r.hi - r.lo) * idx[k] / double(r.count - 1);
          L(i, j) = v;
          ++k;
        }
      }
      out.push_back(L * L.transpose());
      int c = nf - 1;
      while (c >= 0 && ++idx[c] >= factor_ranges[c].count) idx[c--] = 0;
      if (c < 0) break;
    }
  }
  return out;
}

DirectSearchResult direct_search_estimator(
    const DiscreteLTI& sys, const Dataset& ds,
    const std::map<std::string, ReferenceSignal>& refs,
    const NoiseModel& noise, const GridSpec& grid) {
  const std::vector<Eigen::MatrixXd> candidates = grid.materialize();
  require(!candidates.empty(), "candidate grid is empty");

  const ObjectiveCoefficients coeffs =
      assemble_objective(sys, ds, refs, noise);

  DirectSearchResult best;
  best.objective = std::numeric_limits<double>::infinity();
  best.objectives.reserve(candidates.size());

  for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
    CandidatePoint point;
    point.Q = symmetrized(candidates[i]);
    CostParams cost{point.Q};
    for (const auto& [ref_id, ref] : refs)
      point.chains.emplace(ref_id,
                           chain_from_bundle(riccati(sys, cost, ref)));
    const double value = evaluate_objective(coeffs, point);
    best.objectives.push_back(value);
    if (value < best.objective) {  // strict: first index wins ties
      best.objective = value;
      best.Q = point.Q;
      best.grid_index = i;
    }
  }
  return best;
}

}  // namespace lqioc::oracle
