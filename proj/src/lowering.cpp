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

#include "lqioc/lowering.hpp"

#include <vector>

#include "lqioc/common.hpp"
#include "lqioc/conic/svec.hpp"

namespace lqioc {

using conic::Cone;
using conic::svec;
using conic::svec_dim;
using conic::smat;

int ProgramLayout::dQ() const { return svec_dim(n); }
int ProgramLayout::dH() const { return svec_dim(m + n + 1); }

namespace {

// Packed basis matrix: smat of a coordinate vector, so S = sum_k v_k E_k.
Eigen::MatrixXd packed_basis(int dim, int k) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
  e(k) = 1.0;
  return smat(e);
}

// Assembles the LMI block of one step given the contribution of a single
// source coordinate. Blocks: rows/cols [0,m) inputs, [m,m+n) states, m+n
// the affine slot.
struct LmiShape {
  int m, n;
  int side() const { return m + n + 1; }

  Eigen::MatrixXd from_P_next(const Eigen::MatrixXd& E,
                              const Eigen::MatrixXd& A,
                              const Eigen::MatrixXd& B) const {
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(side(), side());
    H.topLeftCorner(m, m) = B.transpose() * E * B;
    H.block(0, m, m, n) = B.transpose() * E * A;
    H.block(m, 0, n, m) = H.block(0, m, m, n).transpose();
    H.block(m, m, n, n) = A.transpose() * E * A;
    return H;
  }
  Eigen::MatrixXd from_P_here(const Eigen::MatrixXd& E) const {
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(side(), side());
    H.block(m, m, n, n) = -E;
    return H;
  }
  // Q enters the middle block directly and the affine column through the
  // substituted linear term q_t = -Q r_t.
  Eigen::MatrixXd from_Q(const Eigen::MatrixXd& E,
                         const Eigen::VectorXd& r_t) const {
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(side(), side());
    H.block(m, m, n, n) = E;
    const Eigen::VectorXd beta = -E * r_t;
    H.block(m, m + n, n, 1) = beta;
    H.block(m + n, m, 1, n) = beta.transpose();
    return H;
  }
  Eigen::MatrixXd from_eta_here(int j) const {
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(side(), side());
    H(m + j, m + n) = -1.0;
    H(m + n, m + j) = -1.0;
    return H;
  }
  Eigen::MatrixXd from_eta_next(int j, const Eigen::MatrixXd& A,
                                const Eigen::MatrixXd& B) const {
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(side(), side());
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e(j) = 1.0;
    const Eigen::VectorXd g = B.transpose() * e;
    const Eigen::VectorXd beta = A.transpose() * e;
    H.block(0, m + n, m, 1) = g;
    H.block(m + n, 0, 1, m) = g.transpose();
    H.block(m, m + n, n, 1) += beta;
    H.block(m + n, m, 1, n) += beta.transpose();
    return H;
  }
  Eigen::MatrixXd from_xi() const {
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(side(), side());
    H(m + n, m + n) = 1.0;
    return H;
  }
  Eigen::MatrixXd constant() const {
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(side(), side());
    H.topLeftCorner(m, m).setIdentity();
    return H;
  }
};

}  // namespace

LoweredProgram assemble_program(const DiscreteLTI& sys, const Dataset& ds,
                                const std::map<std::string, ReferenceSignal>& refs,
                                const NoiseModel& noise,
                                const EstimatorConfig& cfg) {
  sys.validate();
  require(cfg.phi > 0.0, "phi must be positive");
  require(cfg.tol_psd > 0.0 && cfg.tol_eq > 0.0, "tolerances must be positive");
  require(!refs.empty(), "at least one reference is required");

  const ObjectiveCoefficients coeffs =
      assemble_objective(sys, ds, refs, noise);

  LoweredProgram out;
  ProgramLayout& layout = out.layout;
  layout.n = sys.n();
  layout.m = sys.m();
  layout.total_steps = ds.total_steps;
  const int n = layout.n;
  const int T = layout.total_steps;
  const int dQ = layout.dQ();
  const int dH = layout.dH();
  require(T >= 2, "need at least two steps");

  // --- variable layout and cones ---
  std::vector<Cone> cones;
  cones.push_back(Cone::psd(n));  // Q
  int cursor = dQ;
  for (const auto& [ref_id, ref] : refs) {
    (void)ref;
    ChainLayout cl;
    cl.ref_id = ref_id;
    cl.p_offset = cursor;
    for (int t = 0; t < T - 1; ++t) cones.push_back(Cone::psd(n));
    cursor += (T - 1) * dQ;
    cl.h_offset = cursor;
    for (int t = 0; t < T - 1; ++t) cones.push_back(Cone::psd(n + layout.m + 1));
    cursor += (T - 1) * dH;
    cl.eta_offset = cursor;
    cones.push_back(Cone::free(n * T));
    cursor += n * T;
    cl.xi_offset = cursor;
    cones.push_back(Cone::free(T - 1));
    cursor += T - 1;
    layout.chains.push_back(cl);
  }
  layout.soc_offset = cursor;
  cones.push_back(Cone::soc(1 + dQ));
  cursor += 1 + dQ;
  const int cols = cursor;

  // --- equality rows ---
  std::vector<Eigen::Triplet<double>> trips;
  std::vector<double> rhs;
  int row = 0;
  auto add = [&](int r, int c, double v) {
    if (v != 0.0) trips.emplace_back(r, c, v);
  };

  const LmiShape shape{layout.m, n};
  std::vector<Eigen::MatrixXd> basis_q(dQ);
  for (int k = 0; k < dQ; ++k) basis_q[k] = packed_basis(dQ, k);

  for (const auto& cl : layout.chains) {
    const ReferenceSignal& ref = refs.at(cl.ref_id);
    for (int t = 0; t < T - 1; ++t) {
      const int hrow = row;
      // h_t itself.
      for (int r = 0; r < dH; ++r) add(hrow + r, cl.h_offset + t * dH + r, 1.0);
      // Subtract each source contribution.
      auto subtract = [&](int col, const Eigen::MatrixXd& contrib) {
        const Eigen::VectorXd sv = svec(contrib, 1e-6);
        for (int r = 0; r < dH; ++r) add(hrow + r, col, -sv(r));
      };
      for (int k = 0; k < dQ; ++k) {
        // P_{t+1}: a chain variable for t+1 <= T-2, otherwise Q itself.
        const int pnext_col = (t + 1 <= T - 2)
                                  ? cl.p_offset + (t + 1) * dQ + k
                                  : layout.q_offset + k;
        subtract(pnext_col, shape.from_P_next(basis_q[k], sys.A, sys.B));
        subtract(cl.p_offset + t * dQ + k, shape.from_P_here(basis_q[k]));
        subtract(layout.q_offset + k,
                 shape.from_Q(basis_q[k], ref.samples[t]));
      }
      for (int j = 0; j < n; ++j) {
        subtract(cl.eta_offset + t * n + j, shape.from_eta_here(j));
        subtract(cl.eta_offset + (t + 1) * n + j,
                 shape.from_eta_next(j, sys.A, sys.B));
      }
      subtract(cl.xi_offset + t, shape.from_xi());
      const Eigen::VectorXd cb = svec(shape.constant());
      for (int r = 0; r < dH; ++r) rhs.push_back(cb(r));
      row += dH;
    }
    // Terminal tie: eta_{T-1} = -Q r_{T-1}.
    for (int j = 0; j < n; ++j) {
      add(row, cl.eta_offset + (T - 1) * n + j, 1.0);
      for (int k = 0; k < dQ; ++k) {
        const double v = (basis_q[k] * ref.samples[T - 1])(j);
        add(row, layout.q_offset + k, v);
      }
      rhs.push_back(0.0);
      ++row;
    }
  }
  // Frobenius ball: soc = (phi, packed Q).
  add(row, layout.soc_offset, 1.0);
  rhs.push_back(cfg.phi);
  ++row;
  for (int k = 0; k < dQ; ++k) {
    add(row, layout.soc_offset + 1 + k, 1.0);
    add(row, layout.q_offset + k, -1.0);
    rhs.push_back(0.0);
    ++row;
  }

  // --- cost vector ---
  Eigen::VectorXd c = Eigen::VectorXd::Zero(cols);
  Eigen::MatrixXd cq = coeffs.C_Q;
  for (const auto& cl : layout.chains) {
    const ChainCoefficients& cc = coeffs.chains.at(cl.ref_id);
    cq += cc.C_P[T - 1];  // terminal value matrix is Q by substitution
    for (int t = 0; t < T - 1; ++t)
      c.segment(cl.p_offset + t * dQ, dQ) = svec(symmetrized(cc.C_P[t]));
    for (int t = 0; t < T; ++t)
      c.segment(cl.eta_offset + t * n, n) = cc.c_eta[t];
    c.segment(cl.xi_offset, T - 1) = cc.c_xi;
  }
  c.segment(layout.q_offset, dQ) = svec(symmetrized(cq));

  conic::ConicProgram& prog = out.program;
  prog.c = std::move(c);
  prog.b = Eigen::Map<Eigen::VectorXd>(rhs.data(), static_cast<long>(rhs.size()));
  prog.Aeq.resize(row, cols);
  prog.Aeq.setFromTriplets(trips.begin(), trips.end());
  prog.cones = std::move(cones);
  prog.validate();

  // --- excitation diagnostics ---
  out.diagnostics = dataset_diagnostics(ds);
  Eigen::MatrixXd moment = Eigen::MatrixXd::Zero(n + 1, n + 1);
  int pooled = 0;
  for (const auto& tr : ds.trajectories) {
    if (tr.N != ds.total_steps) continue;
    for (const auto& x : tr.states) {
      Eigen::VectorXd aug(n + 1);
      aug << x, 1.0;
      moment += aug * aug.transpose();
      ++pooled;
    }
  }
  if (pooled > 0) {
    moment /= static_cast<double>(pooled);
    out.excitation_min_eig = min_eigenvalue(moment);
    if (out.excitation_min_eig < cfg.excitation_warn_tol)
      out.diagnostics.push_back(
          "second-moment matrix of augmented states is near singular; the "
          "data may not excite every cost direction");
  }
  return out;
}

CandidatePoint extract_candidate(const ProgramLayout& layout,
                                 const Eigen::VectorXd& x) {
  const int T = layout.total_steps;
  const int n = layout.n;
  const int dQ = layout.dQ();
  CandidatePoint point;
  point.Q = smat(x.segment(layout.q_offset, dQ));
  for (const auto& cl : layout.chains) {
    CertificateChain chain;
    chain.P.reserve(T);
    chain.eta.reserve(T);
    for (int t = 0; t < T - 1; ++t)
      chain.P.push_back(smat(x.segment(cl.p_offset + t * dQ, dQ)));
    chain.P.push_back(point.Q);
    for (int t = 0; t < T; ++t)
      chain.eta.push_back(x.segment(cl.eta_offset + t * n, n));
    chain.xi = x.segment(cl.xi_offset, T - 1);
    point.chains.emplace(cl.ref_id, std::move(chain));
  }
  return point;
}

}  // namespace lqioc
