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

#ifndef QUADLIN_DAG_H_
#define QUADLIN_DAG_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "quadlin/rational.h"

namespace quadlin {

using VertexId = std::size_t;
using ArcId = std::size_t;

inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kDefaultPathCap = 1'000'000;

struct Arc {
  VertexId tail;
  VertexId head;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Topological order of the vertices 0..n-1 (Kahn's algorithm, smallest
// vertex id first among ready vertices). Throws CycleDetected.
std::vector<VertexId> topological_sort(std::size_t num_vertices, const std::vector<Arc>& arcs);

// Simple directed acyclic graph with a distinguished source and target.
// Arc labels are the positions in the arc list and are never reordered. A
// graph produced by prune_to_corridor() records, for each of its vertices
// and arcs, the id it had in the graph it was pruned from.
class Dag {
 public:
  // Throws ValidationError (bad ids, self loops, parallel arcs, s == t) or
  // CycleDetected.
  Dag(std::size_t num_vertices, std::vector<Arc> arcs, VertexId source, VertexId target);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_arcs() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(ArcId e) const { return arcs_[e]; }
  VertexId source() const { return source_; }
  VertexId target() const { return target_; }

  // Outgoing / incoming arc ids in increasing label order.
  const std::vector<ArcId>& out_arcs(VertexId v) const { return out_[v]; }
  const std::vector<ArcId>& in_arcs(VertexId v) const { return in_[v]; }

  const std::vector<VertexId>& topological_order() const { return order_; }
  std::size_t topological_position(VertexId v) const { return position_[v]; }

  // reaches(u, v): there is a directed u-v path (reflexive).
  bool reaches(VertexId u, VertexId v) const { return reach_[u * num_vertices_ + v] != 0; }

  // Every vertex lies on some source-target path.
  bool is_corridor() const;

  bool is_transshipment(VertexId v) const { return v != source_ && v != target_; }

  // Ids in the graph this one was pruned from (identity for a root graph).
  const std::vector<ArcId>& arc_origin() const { return arc_origin_; }
  const std::vector<VertexId>& vertex_origin() const { return vertex_origin_; }

  // Arc id of the (unique) arc tail->head, or kNone.
  ArcId find_arc(VertexId tail, VertexId head) const;

 private:
  friend Dag prune_to_corridor(const Dag& g, VertexId v);

  std::size_t num_vertices_;
  std::vector<Arc> arcs_;
  VertexId source_;
  VertexId target_;
  std::vector<std::vector<ArcId>> out_;
  std::vector<std::vector<ArcId>> in_;
  std::vector<VertexId> order_;
  std::vector<std::size_t> position_;
  std::vector<std::uint8_t> reach_;
  std::vector<ArcId> arc_origin_;
  std::vector<VertexId> vertex_origin_;
};

struct StPath {
  std::vector<ArcId> arcs;            // in traversal order
  std::vector<std::uint8_t> incidence;  // length m, 0/1

  bool contains(ArcId e) const { return incidence[e] != 0; }
  RationalVector incidence_vector() const;

  friend bool operator==(const StPath&, const StPath&) = default;
};

StPath make_path(const Dag& g, std::vector<ArcId> arcs);

// True when `arcs` is a valid source-target path of g.
bool is_st_path(const Dag& g, const std::vector<ArcId>& arcs);

// Induced subgraph of all vertices/arcs on some source-v path, with v as the
// new target. Vertex and arc ids are compacted preserving relative order.
// Throws Unreachable when v cannot be reached from the source.
Dag prune_to_corridor(const Dag& g, VertexId v);

// All source-target paths in lexicographic order of their arc-id sequences.
// Throws PathExplosion when more than `cap` paths exist.
std::vector<StPath> enumerate_st_paths(const Dag& g, std::size_t cap = kDefaultPathCap);

// Number of source-target paths (saturating at SIZE_MAX).
std::size_t count_st_paths(const Dag& g);

// Per-vertex classification of arcs. For each transshipment vertex the
// outgoing arc with the smallest id is non-basic; every other arc is basic.
struct ArcPartition {
  std::vector<ArcId> nonbasic_of;  // per vertex; kNone for source/target
  std::vector<bool> is_basic;      // per arc
  std::vector<ArcId> basic;        // grouped by tail topological position, then id
  std::vector<ArcId> nonbasic;     // increasing id
};

// Requires a corridor graph (every transshipment vertex has an out-arc).
ArcPartition classify_arcs(const Dag& g);
std::vector<ArcId> non_basic_arcs(const Dag& g);

// Critical path of basic arc e = (u, v): the lexicographically smallest
// source-u path (greedy smallest arc id), then e, then the unique all
// non-basic v-target path.
StPath critical_path(const Dag& g, const ArcPartition& partition, ArcId e);
StPath critical_path(const Dag& g, ArcId e);

// Sound subset of the arc pairs that never lie on a common source-target
// path: shared tail, shared head, or mutually unreachable. Pairs (e, f) with
// e < f, sorted.
std::vector<std::pair<ArcId, ArcId>> forbidden_pairs(const Dag& g);

}  // namespace quadlin

#endif  // QUADLIN_DAG_H_
