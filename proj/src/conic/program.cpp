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

#include "lqioc/conic/program.hpp"

#include <fstream>
#include <ostream>

#include "lqioc/common.hpp"

namespace lqioc::conic {

void ConicProgram::validate() const {
  require(total_dim(cones) == cols(),
          "cone blocks must cover the variable vector exactly");
  require(Aeq.cols() == cols(), "Aeq column count must match c");
  require(Aeq.rows() == rows(), "Aeq row count must match b");
  require(c.allFinite() && b.allFinite(), "program has non-finite data");
  for (const auto& cone : cones) require(cone.dim >= 1, "empty cone block");
}

std::string status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::MaxIter: return "max_iter";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
  }
  return "?";
}

void dump_program(const ConicProgram& p, std::ostream& os) {
  os << "conic-program 1\n";
  os << "dims " << p.rows() << " " << p.cols() << "\n";
  for (const auto& cone : p.cones) {
    os << "cone " << cone_name(cone.kind) << " "
       << (cone.kind == ConeKind::Psd ? cone.side : cone.dim) << "\n";
  }
  for (int i = 0; i < p.c.size(); ++i)
    if (p.c(i) != 0.0) os << "c " << i << " " << fmt17(p.c(i)) << "\n";
  for (int k = 0; k < p.Aeq.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(p.Aeq, k); it; ++it)
      os << "A " << it.row() << " " << it.col() << " " << fmt17(it.value())
         << "\n";
  for (int i = 0; i < p.b.size(); ++i)
    if (p.b(i) != 0.0) os << "b " << i << " " << fmt17(p.b(i)) << "\n";
}

void dump_program(const ConicProgram& p, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open for writing: " + path);
  dump_program(p, os);
}

}  // namespace lqioc::conic
