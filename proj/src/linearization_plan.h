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

#ifndef QUADLIN_SRC_LINEARIZATION_PLAN_H_
#define QUADLIN_SRC_LINEARIZATION_PLAN_H_

#include <optional>
#include <vector>

#include "quadlin/dag.h"
#include "quadlin/matrix.h"
#include "quadlin/rational.h"

namespace quadlin::internal {

// Everything about one corridor G_v that does not depend on the cost
// matrix: its arcs (as root ids), non-basic arcs, critical paths and the
// unit lower-triangular critical-path matrix.
struct CorridorPlan {
  std::optional<Dag> graph;         // empty for v == source
  std::vector<ArcId> root_arcs;     // local arc id -> root arc id
  std::vector<ArcId> local_of_root;  // root arc id -> local id or kNone
  ArcPartition partition;
  std::vector<std::vector<ArcId>> critical_paths;  // root ids, one per basic arc
  RationalMatrix lower;

  std::size_t num_arcs() const { return root_arcs.size(); }
};

// Cost-independent precomputation for the DAG linearization algorithm. The
// cost matrices passed to its methods are indexed by root arc ids and must
// have a zero diagonal.
class LinearizationPlan {
 public:
  explicit LinearizationPlan(const Dag& root);

  const Dag& root() const { return root_; }
  const CorridorPlan& corridor(VertexId v) const { return corridors_[v]; }

  // p_v, indexed by the local arc ids of G_v.
  RationalVector pseudo(VertexId v, const RationalMatrix& q) const;
  std::vector<RationalVector> all_pseudo(const RationalMatrix& q) const;

  // (R_u o T_e)(p_v) for e = (u, v), indexed by G_u's local arc ids.
  RationalVector transformed(ArcId e, const RationalVector& head_pseudo,
                             const RationalMatrix& q) const;

 private:
  const Dag& root_;
  std::vector<CorridorPlan> corridors_;
};

// In-place reduced form on g (ids local to g).
void reduce_in_place(const Dag& g, const ArcPartition& partition, RationalVector& c);

}  // namespace quadlin::internal

#endif  // QUADLIN_SRC_LINEARIZATION_PLAN_H_
