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

#include "quadlin/dag.h"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "quadlin/errors.h"

namespace quadlin {

std::vector<VertexId> topological_sort(std::size_t num_vertices, const std::vector<Arc>& arcs) {
  std::vector<std::size_t> indegree(num_vertices, 0);
  std::vector<std::vector<VertexId>> succ(num_vertices);
  for (const Arc& a : arcs) {
    if (a.tail >= num_vertices || a.head >= num_vertices) {
      throw ValidationError("arc endpoint out of range");
    }
    succ[a.tail].push_back(a.head);
    ++indegree[a.head];
  }
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < num_vertices; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<VertexId> order;
  order.reserve(num_vertices);
  while (!ready.empty()) {
    const VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (VertexId w : succ[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  if (order.size() != num_vertices) throw CycleDetected("graph contains a directed cycle");
  return order;
}

Dag::Dag(std::size_t num_vertices, std::vector<Arc> arcs, VertexId source, VertexId target)
    : num_vertices_(num_vertices),
      arcs_(std::move(arcs)),
      source_(source),
      target_(target),
      out_(num_vertices),
      in_(num_vertices) {
  if (source >= num_vertices || target >= num_vertices) {
    throw ValidationError("source/target out of range");
  }
  if (source == target) throw ValidationError("source and target coincide");
  std::set<std::pair<VertexId, VertexId>> seen;
  for (ArcId e = 0; e < arcs_.size(); ++e) {
    const Arc& a = arcs_[e];
    if (a.tail >= num_vertices || a.head >= num_vertices) {
      throw ValidationError("arc " + std::to_string(e + 1) + " has an endpoint out of range");
    }
    if (a.tail == a.head) throw CycleDetected("self loop on arc " + std::to_string(e + 1));
    if (!seen.emplace(a.tail, a.head).second) {
      throw ValidationError("parallel arc " + std::to_string(e + 1));
    }
    out_[a.tail].push_back(e);
    in_[a.head].push_back(e);
  }
  order_ = topological_sort(num_vertices_, arcs_);
  position_.assign(num_vertices_, 0);
  for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = i;

  reach_.assign(num_vertices_ * num_vertices_, 0);
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    const VertexId u = *it;
    reach_[u * num_vertices_ + u] = 1;
    for (ArcId e : out_[u]) {
      const VertexId w = arcs_[e].head;
      for (VertexId x = 0; x < num_vertices_; ++x)
        reach_[u * num_vertices_ + x] |= reach_[w * num_vertices_ + x];
    }
  }

  arc_origin_.resize(arcs_.size());
  for (ArcId e = 0; e < arcs_.size(); ++e) arc_origin_[e] = e;
  vertex_origin_.resize(num_vertices_);
  for (VertexId v = 0; v < num_vertices_; ++v) vertex_origin_[v] = v;
}

bool Dag::is_corridor() const {
  for (VertexId v = 0; v < num_vertices_; ++v)
    if (!reaches(source_, v) || !reaches(v, target_)) return false;
  return true;
}

ArcId Dag::find_arc(VertexId tail, VertexId head) const {
  for (ArcId e : out_[tail])
    if (arcs_[e].head == head) return e;
  return kNone;
}

RationalVector StPath::incidence_vector() const {
  RationalVector x = zero_vector(incidence.size());
  for (std::size_t e = 0; e < incidence.size(); ++e)
    if (incidence[e]) x[e] = 1;
  return x;
}

StPath make_path(const Dag& g, std::vector<ArcId> arcs) {
  StPath p;
  p.incidence.assign(g.num_arcs(), 0);
  for (ArcId e : arcs) p.incidence[e] = 1;
  p.arcs = std::move(arcs);
  return p;
}

bool is_st_path(const Dag& g, const std::vector<ArcId>& arcs) {
  if (arcs.empty()) return false;
  VertexId at = g.source();
  std::vector<bool> visited(g.num_vertices(), false);
  visited[at] = true;
  for (ArcId e : arcs) {
    if (e >= g.num_arcs() || g.arc(e).tail != at) return false;
    at = g.arc(e).head;
    if (visited[at]) return false;
    visited[at] = true;
  }
  return at == g.target();
}

Dag prune_to_corridor(const Dag& g, VertexId v) {
  if (v >= g.num_vertices() || !g.reaches(g.source(), v)) {
    throw Unreachable("vertex " + std::to_string(v + 1) + " is not reachable from the source");
  }
  // The corridor to the source has no arcs and no distinct target.
  if (v == g.source()) throw Unreachable("corridor to the source itself is empty");
  std::vector<VertexId> new_id(g.num_vertices(), kNone);
  std::vector<VertexId> vertex_origin;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (g.reaches(g.source(), u) && g.reaches(u, v)) {
      new_id[u] = vertex_origin.size();
      vertex_origin.push_back(u);
    }
  }
  std::vector<Arc> arcs;
  std::vector<ArcId> arc_origin;
  for (ArcId e = 0; e < g.num_arcs(); ++e) {
    const Arc& a = g.arc(e);
    if (new_id[a.tail] != kNone && new_id[a.head] != kNone) {
      arcs.push_back({new_id[a.tail], new_id[a.head]});
      arc_origin.push_back(e);
    }
  }
  Dag pruned(vertex_origin.size(), std::move(arcs), new_id[g.source()], new_id[v]);
  pruned.arc_origin_ = std::move(arc_origin);
  pruned.vertex_origin_ = std::move(vertex_origin);
  return pruned;
}

namespace {

void enumerate_from(const Dag& g, VertexId at, std::vector<ArcId>& stack,
                    std::vector<StPath>& out, std::size_t cap) {
  if (at == g.target()) {
    if (out.size() >= cap) {
      throw PathExplosion("more than " + std::to_string(cap) + " s-t paths");
    }
    out.push_back(make_path(g, stack));
    return;
  }
  for (ArcId e : g.out_arcs(at)) {
    const VertexId next = g.arc(e).head;
    if (!g.reaches(next, g.target())) continue;
    stack.push_back(e);
    enumerate_from(g, next, stack, out, cap);
    stack.pop_back();
  }
}

}  // namespace

std::vector<StPath> enumerate_st_paths(const Dag& g, std::size_t cap) {
  std::vector<StPath> out;
  std::vector<ArcId> stack;
  if (g.reaches(g.source(), g.target())) enumerate_from(g, g.source(), stack, out, cap);
  return out;
}

std::size_t count_st_paths(const Dag& g) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> count(g.num_vertices(), 0);
  count[g.target()] = 1;
  const auto& order = g.topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId u = *it;
    if (u == g.target()) continue;
    std::size_t total = 0;
    for (ArcId e : g.out_arcs(u)) {
      const std::size_t c = count[g.arc(e).head];
      total = (kMax - total < c) ? kMax : total + c;
    }
    count[u] = total;
  }
  return count[g.source()];
}

ArcPartition classify_arcs(const Dag& g) {
  ArcPartition p;
  p.nonbasic_of.assign(g.num_vertices(), kNone);
  p.is_basic.assign(g.num_arcs(), true);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!g.is_transshipment(v)) continue;
    if (g.out_arcs(v).empty()) {
      throw AssumptionViolated("transshipment vertex " + std::to_string(v + 1) +
                               " has no outgoing arc");
    }
    const ArcId f = g.out_arcs(v).front();  // out_arcs is sorted by id
    p.nonbasic_of[v] = f;
    p.is_basic[f] = false;
  }
  for (VertexId u : g.topological_order())
    for (ArcId e : g.out_arcs(u))
      if (p.is_basic[e]) p.basic.push_back(e);
  for (ArcId e = 0; e < g.num_arcs(); ++e)
    if (!p.is_basic[e]) p.nonbasic.push_back(e);
  return p;
}

std::vector<ArcId> non_basic_arcs(const Dag& g) { return classify_arcs(g).nonbasic; }

StPath critical_path(const Dag& g, const ArcPartition& partition, ArcId e) {
  if (e >= g.num_arcs() || !partition.is_basic[e]) {
    throw AssumptionViolated("critical path requested for a non-basic arc");
  }
  const VertexId u = g.arc(e).tail;
  std::vector<ArcId> arcs;
  VertexId at = g.source();
  while (at != u) {
    ArcId chosen = kNone;
    for (ArcId f : g.out_arcs(at)) {
      if (g.reaches(g.arc(f).head, u)) {
        chosen = f;
        break;
      }
    }
    if (chosen == kNone) throw Unreachable("tail of arc is not reachable from the source");
    arcs.push_back(chosen);
    at = g.arc(chosen).head;
  }
  arcs.push_back(e);
  at = g.arc(e).head;
  while (at != g.target()) {
    const ArcId f = partition.nonbasic_of[at];
    if (f == kNone) throw AssumptionViolated("non-basic chain left the corridor");
    arcs.push_back(f);
    at = g.arc(f).head;
  }
  return make_path(g, std::move(arcs));
}

StPath critical_path(const Dag& g, ArcId e) { return critical_path(g, classify_arcs(g), e); }

std::vector<std::pair<ArcId, ArcId>> forbidden_pairs(const Dag& g) {
  std::vector<std::pair<ArcId, ArcId>> pairs;
  for (ArcId e = 0; e < g.num_arcs(); ++e) {
    const Arc& a = g.arc(e);
    for (ArcId f = e + 1; f < g.num_arcs(); ++f) {
      const Arc& b = g.arc(f);
      const bool same_tail = a.tail == b.tail;
      const bool same_head = a.head == b.head;
      const bool apart = !g.reaches(a.head, b.tail) && !g.reaches(b.head, a.tail);
      if (same_tail || same_head || apart) pairs.emplace_back(e, f);
    }
  }
  return pairs;
}

}  // namespace quadlin
