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

#include "lqioc/conic/cones.hpp"

#include "lqioc/common.hpp"
#include "lqioc/conic/svec.hpp"

namespace lqioc::conic {

Cone Cone::psd(int side) {
  require(side >= 1, "psd cone side must be positive");
  return {ConeKind::Psd, svec_dim(side), side};
}

std::string cone_name(ConeKind kind) {
  switch (kind) {
    case ConeKind::Zero: return "zero";
    case ConeKind::Free: return "free";
    case ConeKind::NonNeg: return "nonneg";
    case ConeKind::Soc: return "soc";
    case ConeKind::Psd: return "psd";
  }
  return "?";
}

int total_dim(const std::vector<Cone>& cones) {
  int d = 0;
  for (const auto& c : cones) d += c.dim;
  return d;
}

bool scaling_must_be_uniform(ConeKind kind) {
  return kind == ConeKind::Soc || kind == ConeKind::Psd;
}

namespace {

void project_soc(Eigen::Ref<Eigen::VectorXd> v) {
  const double t = v(0);
  const double unorm = v.tail(v.size() - 1).norm();
  if (unorm <= t) return;          // already inside
  if (unorm <= -t) {               // polar: projects to the origin
    v.setZero();
    return;
  }
  const double scale = 0.5 * (1.0 + t / unorm);
  v(0) = 0.5 * (t + unorm);
  v.tail(v.size() - 1) *= scale;
}

void project_psd(Eigen::Ref<Eigen::VectorXd> v, int side) {
  if (side == 1) {
    v(0) = std::max(v(0), 0.0);
    return;
  }
  const Eigen::MatrixXd S = smat(v);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  if (side <= 3) {
    es.computeDirect(S);
  } else {
    es.compute(S);
  }
  numeric_check(es.info() == Eigen::Success,
                "psd projection: eigendecomposition failed");
  const Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
  v = svec(es.eigenvectors() * lam.asDiagonal() *
           es.eigenvectors().transpose(), 1e-6);
}

}  // namespace

void project_cone(Eigen::Ref<Eigen::VectorXd> v, const Cone& cone) {
  require(v.size() == cone.dim, "block length does not match cone");
  switch (cone.kind) {
    case ConeKind::Zero:
      v.setZero();
      break;
    case ConeKind::Free:
      break;
    case ConeKind::NonNeg:
      v = v.cwiseMax(0.0);
      break;
    case ConeKind::Soc:
      project_soc(v);
      break;
    case ConeKind::Psd:
      project_psd(v, cone.side);
      break;
  }
}

void project_dual_cone(Eigen::Ref<Eigen::VectorXd> v, const Cone& cone) {
  Eigen::VectorXd neg = -v;
  project_cone(neg, cone);
  v += neg;
}

}  // namespace lqioc::conic
