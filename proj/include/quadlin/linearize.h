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

#ifndef QUADLIN_LINEARIZE_H_
#define QUADLIN_LINEARIZE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "quadlin/dag.h"
#include "quadlin/instance.h"
#include "quadlin/matrix.h"
#include "quadlin/rational.h"

namespace quadlin {

// A cost vector that is zero on every non-basic arc of its graph.
struct ReducedCostVector {
  RationalVector entries;
  std::vector<ArcId> nonbasic;
};

// Evidence that no linearization exists: for the arc e = (u, v), the
// reduced transform of the head's pseudo-linearization differs from the
// tail's pseudo-linearization. Both vectors are indexed by `tail_arcs`, the
// arcs (ids in the input graph) of the corridor ending at u.
struct NonLinearizabilityWitness {
  ArcId arc;
  std::vector<ArcId> tail_arcs;
  RationalVector transformed;  // (R_u o T_e)(p_v)
  RationalVector expected;     // p_u
};

struct LinearizationOutcome {
  // Set when the cost matrix is linearizable: the reduced linearization
  // vector (including the diagonal of Q).
  std::optional<ReducedCostVector> linearization;
  std::optional<NonLinearizabilityWitness> witness;

  bool linearizable() const { return linearization.has_value(); }
};

// Reduced form: at each transshipment vertex in reverse topological order,
// subtract the non-basic arc's cost from the vertex's out-arcs and add it to
// its in-arcs. The result has the same cost on every s-t path.
ReducedCostVector reduce_cost_vector(const Dag& g, std::span<const Rational> c);

// The unique reduced vector p with p^T x = x^T Q x on every critical path of
// g (Q zero-diagonal, g a corridor). Solved by forward substitution on the
// unit lower-triangular critical-path matrix.
ReducedCostVector pseudo_linearization(const Dag& g, const RationalMatrix& q);

// Moves a cost vector from `parent` to its corridor `child` ending at the
// tail of arc e = (v, t'), where t' is the parent's target:
//   out_{e'} = c_{e'} - (q_{e,e'} + q_{e',e})  [+ c_e when tail(e') = s].
// `child` must come from prune_to_corridor(parent, tail(e)); q and c are
// indexed by parent arc ids; the result by child arc ids.
RationalVector transform_te(const Dag& parent, const Dag& child, const RationalMatrix& q,
                            std::span<const Rational> c, ArcId e);

// Decides whether x^T Q x = c^T x on all s-t paths for some c. The diagonal
// of Q is split off, the zero-diagonal part is decided arc by arc, and the
// diagonal is folded back into the (re-reduced) answer. Throws
// AssumptionViolated when the graph is not a corridor.
LinearizationOutcome linearize_qspp(const QsppInstance& q);

// Basis Q_1..Q_k (zero diagonal) of the linearizable matrices of g, each
// with its reduced linearization vector.
struct SpanningSet {
  std::vector<RationalMatrix> matrices;
  std::vector<RationalVector> vectors;

  std::size_t dimension() const { return matrices.size(); }
  LinearizableFamily as_family() const;
};

SpanningSet spanning_set(const Dag& g);

// Q (zero-diagonal part) lies in the span of the basis: exact rank test.
bool in_span(const SpanningSet& basis, const RationalMatrix& q);

}  // namespace quadlin

#endif  // QUADLIN_LINEARIZE_H_
