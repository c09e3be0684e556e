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

#include "lqioc/conic/solver.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SparseCholesky>

#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "lqioc/common.hpp"

namespace lqioc::conic {

namespace {

// Diagonal equilibration of Aeq. Column factors are uniform within Soc and
// Psd blocks so the scaled cones stay the same cones.
struct Scaling {
  Eigen::VectorXd row;  // E
  Eigen::VectorXd col;  // D
  double cost = 1.0;    // sigma applied to c
};

Scaling ruiz_equilibrate(Eigen::SparseMatrix<double>& A,
                         const std::vector<Cone>& cones, int iters) {
  const int rows = static_cast<int>(A.rows());
  const int cols = static_cast<int>(A.cols());
  Scaling sc;
  sc.row = Eigen::VectorXd::Ones(rows);
  sc.col = Eigen::VectorXd::Ones(cols);
  if (rows == 0 || A.nonZeros() == 0) return sc;

  for (int pass = 0; pass < iters; ++pass) {
    Eigen::VectorXd rnorm = Eigen::VectorXd::Zero(rows);
    Eigen::VectorXd cnorm = Eigen::VectorXd::Zero(cols);
    for (int k = 0; k < A.outerSize(); ++k) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it) {
        const double a = std::abs(it.value());
        rnorm(it.row()) = std::max(rnorm(it.row()), a);
        cnorm(it.col()) = std::max(cnorm(it.col()), a);
      }
    }
    Eigen::VectorXd er(rows), ec(cols);
    for (int i = 0; i < rows; ++i)
      er(i) = rnorm(i) > 1e-12 ? 1.0 / std::sqrt(rnorm(i)) : 1.0;
    int offset = 0;
    for (const auto& cone : cones) {
      if (scaling_must_be_uniform(cone.kind)) {
        double blockmax = 0.0;
        for (int j = 0; j < cone.dim; ++j)
          blockmax = std::max(blockmax, cnorm(offset + j));
        const double f = blockmax > 1e-12 ? 1.0 / std::sqrt(blockmax) : 1.0;
        for (int j = 0; j < cone.dim; ++j) ec(offset + j) = f;
      } else {
        for (int j = 0; j < cone.dim; ++j) {
          const double cn = cnorm(offset + j);
          ec(offset + j) = cn > 1e-12 ? 1.0 / std::sqrt(cn) : 1.0;
        }
      }
      offset += cone.dim;
    }
    for (int k = 0; k < A.outerSize(); ++k)
      for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it)
        it.valueRef() *= er(it.row()) * ec(it.col());
    sc.row.array() *= er.array();
    sc.col.array() *= ec.array();
  }
  return sc;
}

void project_blocks(Eigen::VectorXd& v, const std::vector<Cone>& cones) {
  int offset = 0;
  for (const auto& cone : cones) {
    project_cone(v.segment(offset, cone.dim), cone);
    offset += cone.dim;
  }
}

double dist_to_cone(const Eigen::VectorXd& v, const std::vector<Cone>& cones,
                    bool dual) {
  Eigen::VectorXd p = v;
  int offset = 0;
  for (const auto& cone : cones) {
    if (dual) {
      project_dual_cone(p.segment(offset, cone.dim), cone);
    } else {
      project_cone(p.segment(offset, cone.dim), cone);
    }
    offset += cone.dim;
  }
  return (v - p).norm();
}

// Factorization of Aeq Aeq', dense below a size cutoff, sparse above.
class GramSolver {
 public:
  void factor(const Eigen::SparseMatrix<double>& A) {
    const int rows = static_cast<int>(A.rows());
    dense_ = rows <= 2500;
    Eigen::SparseMatrix<double> gram = A * A.transpose();
    if (dense_) {
      dense_llt_.compute(Eigen::MatrixXd(gram));
      numeric_check(dense_llt_.info() == Eigen::Success,
                    "Aeq Aeq' factorization failed (dependent rows?)");
    } else {
      sparse_llt_.compute(gram);
      numeric_check(sparse_llt_.info() == Eigen::Success,
                    "Aeq Aeq' factorization failed (dependent rows?)");
    }
  }
  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const {
    return dense_ ? dense_llt_.solve(rhs) : sparse_llt_.solve(rhs);
  }

 private:
  bool dense_ = true;
  Eigen::LLT<Eigen::MatrixXd> dense_llt_;
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> sparse_llt_;
};

}  // namespace

ConicSolution solve_conic(const ConicProgram& p, const SolverSettings& s) {
  p.validate();
  require(s.tol > 0 && s.max_iter > 0, "tolerances must be positive");
  require(s.rho > 0 && s.alpha > 0 && s.alpha < 2, "bad splitting parameters");

  const int cols = p.cols();
  const int rows = p.rows();
  const double rho = s.rho;

  // --- scale ---
  Eigen::SparseMatrix<double> A = p.Aeq;
  Scaling sc = ruiz_equilibrate(A, p.cones, s.ruiz_iters);
  Eigen::VectorXd cs = sc.col.asDiagonal() * p.c;
  const double cinf = cs.lpNorm<Eigen::Infinity>();
  sc.cost = cinf > 1e-12 ? 1.0 / cinf : 1.0;
  cs *= sc.cost;
  const Eigen::VectorXd bs = sc.row.asDiagonal() * p.b;
  const Eigen::SparseMatrix<double> At = A.transpose();

  GramSolver gram;
  if (rows > 0) gram.factor(A);

  const double bnorm = p.b.norm();
  const double cnorm = p.c.norm();

  // --- iterate ---
  Eigen::VectorXd z = Eigen::VectorXd::Zero(cols);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(cols);
  Eigen::VectorXd x(cols), v(cols), xhat(cols);
  Eigen::VectorXd mu = Eigen::VectorXd::Zero(rows);

  // Divergence-test anchors, refreshed every tenth residual check so the
  // iterate differences span a long enough window to form a certificate.
  Eigen::VectorXd mu_mark = mu, z_mark = z;
  double res_at_mark = std::numeric_limits<double>::infinity();
  int checks = 0;

  ConicSolution sol;
  auto unscale_primal = [&](const Eigen::VectorXd& zz) {
    return Eigen::VectorXd(sc.col.asDiagonal() * zz);
  };

  int it = 0;
  for (it = 1; it <= s.max_iter; ++it) {
    // Projection onto {A x = b} of z - y - c/rho, with multiplier mu.
    v = z - y - cs / rho;
    if (rows > 0) {
      mu = gram.solve(A * v - bs);
      x = v - At * mu;
      mu *= rho;
    } else {
      x = v;
    }
    xhat = s.alpha * x + (1.0 - s.alpha) * z;
    z = xhat + y;
    project_blocks(z, p.cones);
    y += xhat - z;

    if (it % s.check_interval != 0 && it != s.max_iter) continue;

    // Residuals on the original data. The dual slack is exact by the Moreau
    // split: sS = -rho * y lies in K* and is orthogonal to z.
    const Eigen::VectorXd xu = unscale_primal(z);
    const Eigen::VectorXd lam =
        rows > 0 ? Eigen::VectorXd(sc.row.asDiagonal() * mu / sc.cost)
                 : Eigen::VectorXd(0);
    Eigen::VectorXd slack_scaled = -rho * y;
    const Eigen::VectorXd su =
        sc.col.cwiseInverse().asDiagonal() * slack_scaled / sc.cost;

    Eigen::VectorXd rp(rows), rd(cols);
    if (rows > 0) {
      rp = p.Aeq * xu - p.b;
      rd = p.c + p.Aeq.transpose() * lam - su;
    } else {
      rd = p.c - su;
    }
    const double primal = rows > 0 ? rp.norm() / (1.0 + bnorm) : 0.0;
    const double dual = rd.norm() / (1.0 + cnorm);
    const double pobj = p.c.dot(xu);
    const double dobj = rows > 0 ? p.b.dot(lam) : 0.0;
    const double gap =
        std::abs(pobj + dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));

    if (s.verbose && (it % (s.check_interval * 40) == 0 || it == s.max_iter))
      std::fprintf(stderr, "  admm it %7d  pri %.2e  dua %.2e  gap %.2e\n",
                   it, primal, dual, gap);

    sol.x = xu;
    sol.y = lam;
    sol.iterations = it;
    sol.primal_residual = primal;
    sol.dual_residual = dual;
    sol.gap = gap;

    if (std::max(std::max(primal, dual), gap) <= s.tol) {
      sol.status = SolveStatus::Optimal;
      return sol;
    }

    // Divergence certificates from iterate differences, checked only after a
    // warm-up and only while the residuals are stagnating; a converging solve
    // never reaches them.
    ++checks;
    const double max_res = std::max(std::max(primal, dual), gap);
    if (it > s.infeas_warmup && max_res > 0.9 * res_at_mark) {
      if (rows > 0) {
        Eigen::VectorXd dy = sc.row.asDiagonal() * (mu - mu_mark) / sc.cost;
        const double dn = dy.norm();
        if (dn > 1e-12) {
          dy /= dn;
          const Eigen::VectorXd aty = p.Aeq.transpose() * dy;
          // Farkas direction: -Aeq' dy in K*, b' dy > 0.
          if (p.b.dot(dy) > s.tol_infeas &&
              dist_to_cone(-aty, p.cones, /*dual=*/true) <=
                  s.tol_infeas * (1.0 + aty.norm())) {
            sol.status = SolveStatus::Infeasible;
            return sol;
          }
        }
      }
      Eigen::VectorXd dx = sc.col.asDiagonal() * (z - z_mark);
      const double dxn = dx.norm();
      if (dxn > 1e-12) {
        dx /= dxn;
        // Recession direction: dx in K, Aeq dx = 0, c' dx < 0.
        const double adx = rows > 0 ? (p.Aeq * dx).norm() : 0.0;
        if (p.c.dot(dx) < -s.tol_infeas && adx <= s.tol_infeas &&
            dist_to_cone(dx, p.cones, /*dual=*/false) <= s.tol_infeas) {
          sol.status = SolveStatus::Unbounded;
          return sol;
        }
      }
    }
    if (checks % 10 == 0) {
      mu_mark = mu;
      z_mark = z;
      res_at_mark = max_res;
    }
  }
  sol.status = SolveStatus::MaxIter;
  return sol;
}

}  // namespace lqioc::conic
