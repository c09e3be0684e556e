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

#include "lqioc/objective.hpp"

#include "lqioc/common.hpp"

namespace lqioc {

CertificateChain chain_from_bundle(const RiccatiBundle& bundle) {
  CertificateChain chain;
  chain.P = bundle.P;
  chain.eta = bundle.eta;
  chain.xi = Eigen::Map<const Eigen::VectorXd>(
      bundle.xi_cert.data(), static_cast<long>(bundle.xi_cert.size()));
  return chain;
}

ObjectiveCoefficients assemble_objective(
    const DiscreteLTI& sys, const Dataset& ds,
    const std::map<std::string, ReferenceSignal>& refs,
    const NoiseModel& noise) {
  ds.validate();
  noise.validate();
  require(ds.size() >= 1, "dataset is empty");
  require(ds.state_dim() == sys.n(), "dataset/system dimension mismatch");
  require(noise.m() == sys.m(), "noise/system dimension mismatch");

  const int n = sys.n();
  const int steps = ds.total_steps;
  const int last = steps - 1;
  const double inv_m = 1.0 / static_cast<double>(ds.size());
  const Eigen::MatrixXd noise_gain =
      sys.B * noise.sigma_w * sys.B.transpose();  // <., P> form of the trace

  ObjectiveCoefficients out;
  out.total_steps = steps;
  out.n = n;
  out.C_Q = Eigen::MatrixXd::Zero(n, n);

  for (const auto& [ref_id, ref] : refs) {
    require(ref.total_steps() == steps && ref.n() == n,
            "reference '" + ref_id + "' does not match the dataset shape");
    ChainCoefficients cc;
    cc.C_P.assign(steps, Eigen::MatrixXd::Zero(n, n));
    cc.c_eta.assign(steps, Eigen::VectorXd::Zero(n));
    cc.c_xi = Eigen::VectorXd::Zero(steps - 1);
    out.chains.emplace(ref_id, std::move(cc));
  }

  for (const auto& tr : ds.trajectories) {
    auto it = out.chains.find(tr.ref_id);
    require(it != out.chains.end(),
            "trajectory references unknown signal '" + tr.ref_id + "'");
    ChainCoefficients& cc = it->second;
    const ReferenceSignal& ref = refs.at(tr.ref_id);
    const int s = tr.start_step();

    const Eigen::VectorXd& x_last = tr.states.back();
    cc.C_P[last] += 0.5 * inv_m * x_last * x_last.transpose();
    cc.c_eta[last] += inv_m * x_last;

    const Eigen::VectorXd& x_start = tr.states.front();
    cc.C_P[s] -= 0.5 * inv_m * x_start * x_start.transpose();
    cc.c_eta[s] -= inv_m * x_start;

    for (int t = s; t < last; ++t) {
      const Eigen::VectorXd& x = tr.states[t - s];
      cc.c_xi(t) += 0.5 * inv_m;
      out.C_Q += 0.5 * inv_m * x * x.transpose();
      out.C_Q -= inv_m * symmetrized(x * ref.samples[t].transpose());
      cc.C_P[t + 1] -= 0.5 * inv_m * noise_gain;
    }
  }
  return out;
}

double evaluate_objective(const ObjectiveCoefficients& coeffs,
                          const CandidatePoint& point) {
  require(point.Q.rows() == coeffs.n && point.Q.cols() == coeffs.n,
          "candidate Q dimension mismatch");
  double value = coeffs.C_Q.cwiseProduct(point.Q).sum();
  for (const auto& [ref_id, cc] : coeffs.chains) {
    auto it = point.chains.find(ref_id);
    require(it != point.chains.end(),
            "candidate lacks a chain for reference '" + ref_id + "'");
    const CertificateChain& chain = it->second;
    require(chain.total_steps() == coeffs.total_steps,
            "candidate chain has wrong length");
    for (int t = 0; t < coeffs.total_steps; ++t) {
      value += cc.C_P[t].cwiseProduct(chain.P[t]).sum();
      value += cc.c_eta[t].dot(chain.eta[t]);
    }
    value += cc.c_xi.dot(chain.xi);
  }
  return value;
}

double evaluate_objective(const DiscreteLTI& sys, const Dataset& ds,
                          const std::map<std::string, ReferenceSignal>& refs,
                          const NoiseModel& noise,
                          const CandidatePoint& point) {
  return evaluate_objective(assemble_objective(sys, ds, refs, noise), point);
}

}  // namespace lqioc
