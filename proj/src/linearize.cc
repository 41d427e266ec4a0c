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

#include "quadlin/linearize.h"

#include <string>
#include <utility>

#include "linearization_plan.h"
#include "quadlin/errors.h"
#include "quadlin/linalg.h"

namespace quadlin {
namespace internal {

void reduce_in_place(const Dag& g, const ArcPartition& partition, RationalVector& c) {
  const auto& order = g.topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    if (!g.is_transshipment(v)) continue;
    const ArcId f = partition.nonbasic_of[v];
    const Rational cf = c[f];
    if (sgn(cf) == 0) continue;
    for (ArcId e : g.out_arcs(v)) c[e] -= cf;
    for (ArcId e : g.in_arcs(v)) c[e] += cf;
  }
}

LinearizationPlan::LinearizationPlan(const Dag& root) : root_(root) {
  if (!root.is_corridor()) {
    throw AssumptionViolated("graph has vertices on no s-t path; prune it to its corridor first");
  }
  const std::size_t m = root.num_arcs();
  corridors_.resize(root.num_vertices());
  for (VertexId v = 0; v < root.num_vertices(); ++v) {
    CorridorPlan& plan = corridors_[v];
    plan.local_of_root.assign(m, kNone);
    if (v == root.source()) continue;
    plan.graph = (v == root.target()) ? root : prune_to_corridor(root, v);
    const Dag& g = *plan.graph;
    if (v == root.target()) {
      plan.root_arcs.resize(m);
      for (ArcId a = 0; a < m; ++a) plan.root_arcs[a] = a;
    } else {
      plan.root_arcs = g.arc_origin();
    }
    for (ArcId a = 0; a < g.num_arcs(); ++a) plan.local_of_root[plan.root_arcs[a]] = a;
    plan.partition = classify_arcs(g);

    const auto& basic = plan.partition.basic;
    std::vector<std::size_t> basic_pos(g.num_arcs(), kNone);
    for (std::size_t k = 0; k < basic.size(); ++k) basic_pos[basic[k]] = k;
    plan.lower = RationalMatrix(basic.size(), basic.size());
    plan.critical_paths.reserve(basic.size());
    for (std::size_t k = 0; k < basic.size(); ++k) {
      const StPath p = critical_path(g, plan.partition, basic[k]);
      std::vector<ArcId> root_ids;
      for (ArcId a : p.arcs) {
        root_ids.push_back(plan.root_arcs[a]);
        if (basic_pos[a] != kNone) plan.lower(k, basic_pos[a]) = 1;
      }
      plan.critical_paths.push_back(std::move(root_ids));
    }
  }
}

RationalVector LinearizationPlan::pseudo(VertexId v, const RationalMatrix& q) const {
  const CorridorPlan& plan = corridors_[v];
  RationalVector p = zero_vector(plan.num_arcs());
  if (!plan.graph) return p;
  const auto& basic = plan.partition.basic;
  RationalVector costs(basic.size());
  for (std::size_t k = 0; k < basic.size(); ++k) {
    Rational s = 0;
    for (ArcId e : plan.critical_paths[k])
      for (ArcId f : plan.critical_paths[k])
        if (sgn(q(e, f)) != 0) s += q(e, f);
    costs[k] = std::move(s);
  }
  const RationalVector solved = solve_lower_triangular(plan.lower, costs);
  for (std::size_t k = 0; k < basic.size(); ++k) p[basic[k]] = solved[k];
  return p;
}

std::vector<RationalVector> LinearizationPlan::all_pseudo(const RationalMatrix& q) const {
  std::vector<RationalVector> out;
  out.reserve(corridors_.size());
  for (VertexId v = 0; v < corridors_.size(); ++v) out.push_back(pseudo(v, q));
  return out;
}

RationalVector LinearizationPlan::transformed(ArcId e, const RationalVector& head_pseudo,
                                              const RationalMatrix& q) const {
  const VertexId u = root_.arc(e).tail;
  const VertexId v = root_.arc(e).head;
  const CorridorPlan& tail_plan = corridors_[u];
  const CorridorPlan& head_plan = corridors_[v];
  RationalVector out = zero_vector(tail_plan.num_arcs());
  if (!tail_plan.graph) return out;
  const Dag& gu = *tail_plan.graph;
  const Rational& ce = head_pseudo[head_plan.local_of_root[e]];
  for (ArcId a = 0; a < gu.num_arcs(); ++a) {
    const ArcId r = tail_plan.root_arcs[a];
    out[a] = head_pseudo[head_plan.local_of_root[r]] - q(e, r) - q(r, e);
    if (gu.arc(a).tail == gu.source()) out[a] += ce;
  }
  reduce_in_place(gu, tail_plan.partition, out);
  return out;
}

}  // namespace internal

ReducedCostVector reduce_cost_vector(const Dag& g, std::span<const Rational> c) {
  if (c.size() != g.num_arcs()) throw DimensionMismatch("cost vector length differs from m");
  ArcPartition partition = classify_arcs(g);
  RationalVector out(c.begin(), c.end());
  internal::reduce_in_place(g, partition, out);
  return {std::move(out), std::move(partition.nonbasic)};
}

ReducedCostVector pseudo_linearization(const Dag& g, const RationalMatrix& q) {
  if (q.rows() != g.num_arcs() || q.cols() != g.num_arcs()) {
    throw DimensionMismatch("cost matrix size differs from m");
  }
  for (ArcId e = 0; e < g.num_arcs(); ++e) {
    if (sgn(q(e, e)) != 0) throw AssumptionViolated("cost matrix must have a zero diagonal");
  }
  const ArcPartition partition = classify_arcs(g);
  const auto& basic = partition.basic;
  std::vector<std::size_t> basic_pos(g.num_arcs(), kNone);
  for (std::size_t k = 0; k < basic.size(); ++k) basic_pos[basic[k]] = k;
  RationalMatrix lower(basic.size(), basic.size());
  RationalVector costs(basic.size());
  for (std::size_t k = 0; k < basic.size(); ++k) {
    const StPath p = critical_path(g, partition, basic[k]);
    Rational s = 0;
    for (ArcId a : p.arcs) {
      if (basic_pos[a] != kNone) lower(k, basic_pos[a]) = 1;
      for (ArcId b : p.arcs) s += q(a, b);
    }
    costs[k] = std::move(s);
  }
  const RationalVector solved = solve_lower_triangular(lower, costs);
  RationalVector p = zero_vector(g.num_arcs());
  for (std::size_t k = 0; k < basic.size(); ++k) p[basic[k]] = solved[k];
  return {std::move(p), partition.nonbasic};
}

RationalVector transform_te(const Dag& parent, const Dag& child, const RationalMatrix& q,
                            std::span<const Rational> c, ArcId e) {
  const std::size_t m = parent.num_arcs();
  if (q.rows() != m || q.cols() != m || c.size() != m) {
    throw DimensionMismatch("transform_te: q and c must be indexed by parent arcs");
  }
  if (e >= m || parent.arc(e).head != parent.target()) {
    throw AssumptionViolated("transform_te: e must enter the parent's target");
  }
  if (child.vertex_origin()[child.target()] != parent.arc(e).tail) {
    throw AssumptionViolated("transform_te: child must be the corridor ending at tail(e)");
  }
  RationalVector out(child.num_arcs());
  for (ArcId a = 0; a < child.num_arcs(); ++a) {
    const ArcId r = child.arc_origin()[a];
    out[a] = c[r] - q(e, r) - q(r, e);
    if (child.arc(a).tail == child.source()) out[a] += c[e];
  }
  return out;
}

LinearizationOutcome linearize_qspp(const QsppInstance& inst) {
  const Dag& g = inst.graph;
  const std::size_t m = g.num_arcs();
  if (inst.cost.rows() != m || inst.cost.cols() != m) {
    throw DimensionMismatch("cost matrix size differs from m");
  }
  if (inst.float_entries) {
    throw ValidationError("linearization is exact-only; the instance has decimal entries");
  }
  RationalMatrix q = inst.cost;
  RationalVector diagonal = diagonal_of(q);
  for (ArcId e = 0; e < m; ++e) q(e, e) = 0;

  const internal::LinearizationPlan plan(g);
  const std::vector<RationalVector> pseudo = plan.all_pseudo(q);

  LinearizationOutcome outcome;
  for (ArcId e = 0; e < m; ++e) {
    const VertexId u = g.arc(e).tail;
    if (u == g.source()) continue;  // G_s has no arcs
    RationalVector lhs = plan.transformed(e, pseudo[g.arc(e).head], q);
    if (lhs != pseudo[u]) {
      NonLinearizabilityWitness w;
      w.arc = e;
      w.tail_arcs = plan.corridor(u).root_arcs;
      w.transformed = std::move(lhs);
      w.expected = pseudo[u];
      outcome.witness = std::move(w);
      return outcome;
    }
  }
  RationalVector c = pseudo[g.target()];
  for (ArcId e = 0; e < m; ++e) c[e] += diagonal[e];
  outcome.linearization = reduce_cost_vector(g, c);
  return outcome;
}

}  // namespace quadlin
