// Copyright 2026 The quadlin Authors
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

#include <utility>

#include "linearization_plan.h"
#include "quadlin/errors.h"
#include "quadlin/linalg.h"
#include "quadlin/linearize.h"

namespace quadlin {
namespace {

// Row-major (i, j), i != j.
std::vector<std::pair<ArcId, ArcId>> offdiagonal_coords(std::size_t m) {
  std::vector<std::pair<ArcId, ArcId>> coords;
  coords.reserve(m * m - m);
  for (ArcId i = 0; i < m; ++i)
    for (ArcId j = 0; j < m; ++j)
      if (i != j) coords.emplace_back(i, j);
  return coords;
}

RationalVector offdiagonal_vector(const RationalMatrix& q) {
  RationalVector v;
  v.reserve(q.rows() * q.rows() - q.rows());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j)
      if (i != j) v.push_back(q(i, j));
  return v;
}

}  // namespace

LinearizableFamily SpanningSet::as_family() const {
  LinearizableFamily family(matrices.empty() ? 0 : matrices.front().rows());
  for (std::size_t k = 0; k < matrices.size(); ++k) family.add(matrices[k], vectors[k]);
  family.set_spanning(true);
  return family;
}

SpanningSet spanning_set(const Dag& g) {
  const std::size_t m = g.num_arcs();
  const internal::LinearizationPlan plan(g);
  const auto coords = offdiagonal_coords(m);

  // Rows of L: one block per arc e = (u, v) with u != s, holding the
  // residual (R_u o T_e)(p_v) - p_u. Every piece is linear in Q, so column
  // k of L is the residual of the unit matrix at coords[k].
  std::size_t num_rows = 0;
  for (ArcId e = 0; e < m; ++e) {
    const VertexId u = g.arc(e).tail;
    if (u != g.source()) num_rows += plan.corridor(u).num_arcs();
  }
  RationalMatrix residual_map(num_rows, coords.size());
  RationalMatrix unit(m, m);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const auto [i, j] = coords[k];
    unit(i, j) = 1;
    const std::vector<RationalVector> pseudo = plan.all_pseudo(unit);
    std::size_t row = 0;
    for (ArcId e = 0; e < m; ++e) {
      const VertexId u = g.arc(e).tail;
      if (u == g.source()) continue;
      const RationalVector lhs = plan.transformed(e, pseudo[g.arc(e).head], unit);
      for (std::size_t a = 0; a < lhs.size(); ++a, ++row) {
        residual_map(row, k) = lhs[a] - pseudo[u][a];
      }
    }
    unit(i, j) = 0;
  }

  SpanningSet out;
  for (const RationalVector& v : null_space_basis(residual_map)) {
    RationalMatrix q(m, m);
    for (std::size_t k = 0; k < coords.size(); ++k) q(coords[k].first, coords[k].second) = v[k];
    out.vectors.push_back(plan.pseudo(g.target(), q));
    out.matrices.push_back(std::move(q));
  }
  return out;
}

bool in_span(const SpanningSet& basis, const RationalMatrix& q) {
  const std::size_t m = q.rows();
  if (q.cols() != m) throw DimensionMismatch("in_span: cost matrix is not square");
  RowSpace space(m * m - m);
  for (const RationalMatrix& b : basis.matrices) {
    if (b.rows() != m) throw DimensionMismatch("in_span: basis size differs from q");
    space.insert(offdiagonal_vector(b));
  }
  return space.contains(offdiagonal_vector(q));
}

}  // namespace quadlin
