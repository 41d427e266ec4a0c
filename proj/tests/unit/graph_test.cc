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

#include <gtest/gtest.h>

#include <algorithm>
#include <queue>

#include "quadlin/dag.h"
#include "quadlin/errors.h"
#include "quadlin/instance.h"
#include "support/generators.h"

namespace quadlin {
namespace {

using testing::Rng;

bool is_topological(const std::vector<VertexId>& order, const std::vector<Arc>& arcs, std::size_t n) {
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  return std::all_of(arcs.begin(), arcs.end(), [&](const Arc& a) { return pos[a.tail] < pos[a.head]; });
}

TEST(TopologicalSort, SingleArc) {
  EXPECT_EQ(topological_sort(2, {{0, 1}}), (std::vector<VertexId>{0, 1}));
}

TEST(TopologicalSort, DiamondHasAValidOrder) {
  const Dag g = testing::diamond();
  const auto& order = g.topological_order();
  EXPECT_TRUE(order == (std::vector<VertexId>{0, 1, 2, 3}) || order == (std::vector<VertexId>{0, 2, 1, 3}));
}

TEST(TopologicalSort, TwoCycleThrows) {
  EXPECT_THROW(topological_sort(2, {{0, 1}, {1, 0}}), CycleDetected);
  EXPECT_THROW(Dag(2, {{0, 1}, {1, 0}}, 0, 1), CycleDetected);
}

TEST(TopologicalSort, RandomGraphsRespectArcs) {
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const Dag g = testing::random_corridor_dag(rng, 2 + trial % 9, 20);
    EXPECT_TRUE(is_topological(g.topological_order(), g.arcs(), g.num_vertices()));
  }
}

TEST(Dag, RejectsMalformedGraphs) {
  EXPECT_THROW(Dag(2, {{0, 0}}, 0, 1), CycleDetected);
  EXPECT_THROW(Dag(2, {{0, 1}, {0, 1}}, 0, 1), ValidationError);
  EXPECT_THROW(Dag(2, {{0, 2}}, 0, 1), ValidationError);
  EXPECT_THROW(Dag(2, {{0, 1}}, 1, 1), ValidationError);
}

TEST(Corridor, DiamondToTargetIsUnchanged) {
  const Dag g = testing::diamond();
  const Dag p = prune_to_corridor(g, 3);
  EXPECT_EQ(p.arcs(), g.arcs());
  EXPECT_EQ(p.arc_origin(), (std::vector<ArcId>{0, 1, 2, 3}));
}

TEST(Corridor, DiamondToVertexTwoIsOneArc) {
  const Dag p = prune_to_corridor(testing::diamond(), 1);
  ASSERT_EQ(p.num_arcs(), 1u);
  EXPECT_EQ(p.arc_origin(), (std::vector<ArcId>{0}));
  EXPECT_EQ(p.vertex_origin()[p.source()], 0u);
  EXPECT_EQ(p.vertex_origin()[p.target()], 1u);
}

TEST(Corridor, DoubleDiamondToMiddleIsFirstDiamond) {
  const Dag p = prune_to_corridor(testing::double_diamond(), 3);
  EXPECT_EQ(p.arc_origin(), (std::vector<ArcId>{0, 1, 2, 3}));
  EXPECT_EQ(p.num_vertices(), 4u);
}

TEST(Corridor, UnreachableThrows) {
  const Dag g(3, {{0, 2}, {1, 2}}, 0, 2);
  EXPECT_THROW(prune_to_corridor(g, 1), Unreachable);
  EXPECT_FALSE(g.is_corridor());
}

// Oracle: vertices reachable from s (forward BFS) and reaching v (backward).
TEST(Corridor, MatchesBidirectionalSearch) {
  Rng rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const Dag g = testing::random_corridor_dag(rng, 3 + trial % 8, 18);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (v == g.source()) continue;
      const Dag p = prune_to_corridor(g, v);
      std::vector<bool> fwd(g.num_vertices()), bwd(g.num_vertices());
      std::queue<VertexId> q;
      q.push(g.source());
      fwd[g.source()] = true;
      while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        for (ArcId e : g.out_arcs(u))
          if (!fwd[g.arc(e).head]) fwd[g.arc(e).head] = true, q.push(g.arc(e).head);
      }
      q.push(v);
      bwd[v] = true;
      while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        for (ArcId e : g.in_arcs(u))
          if (!bwd[g.arc(e).tail]) bwd[g.arc(e).tail] = true, q.push(g.arc(e).tail);
      }
      std::vector<ArcId> expected;
      for (ArcId e = 0; e < g.num_arcs(); ++e) {
        const Arc& a = g.arc(e);
        if (fwd[a.tail] && bwd[a.tail] && fwd[a.head] && bwd[a.head]) expected.push_back(e);
      }
      EXPECT_EQ(p.arc_origin(), expected);
      EXPECT_TRUE(p.is_corridor());
    }
  }
}

TEST(Paths, Diamond) {
  const auto paths = enumerate_st_paths(testing::diamond());
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths[0].arcs, (std::vector<ArcId>{0, 2}));
  EXPECT_EQ(paths[1].arcs, (std::vector<ArcId>{1, 3}));
}

TEST(Paths, SingleArc) {
  EXPECT_EQ(enumerate_st_paths(Dag(2, {{0, 1}}, 0, 1)).size(), 1u);
}

TEST(Paths, TournamentCountIsPowerOfTwo) {
  const QsppInstance t = generate_tournament(13);
  EXPECT_EQ(enumerate_st_paths(t.graph).size(), 2048u);
  EXPECT_EQ(count_st_paths(t.graph), 2048u);
}

TEST(Paths, CapThrows) {
  EXPECT_THROW(enumerate_st_paths(generate_tournament(10).graph, 100), PathExplosion);
}

TEST(Paths, RandomPathsAreValidAndLexicographic) {
  Rng rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const Dag g = testing::random_corridor_dag(rng, 3 + trial % 8, 20);
    const auto paths = enumerate_st_paths(g);
    EXPECT_EQ(paths.size(), count_st_paths(g));
    for (std::size_t i = 0; i < paths.size(); ++i) {
      EXPECT_TRUE(is_st_path(g, paths[i].arcs));
      if (i > 0) EXPECT_LT(paths[i - 1].arcs, paths[i].arcs);
    }
  }
}

TEST(NonBasic, Diamond) {
  EXPECT_EQ(non_basic_arcs(testing::diamond()), (std::vector<ArcId>{2, 3}));
}

TEST(NonBasic, SinglePath) {
  EXPECT_EQ(non_basic_arcs(Dag(3, {{0, 1}, {1, 2}}, 0, 2)), (std::vector<ArcId>{1}));
}

TEST(NonBasic, SmallestLabelWins) {
  // Vertex 2 (id 1) has out-arcs labeled a4=(2,4) and a3=(2,3): a3 is chosen.
  const Dag g(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}, 0, 3);
  const ArcPartition p = classify_arcs(g);
  EXPECT_EQ(p.nonbasic_of[1], 2u);
}

TEST(NonBasic, CountsOnRandomCorridors) {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const Dag g = testing::random_corridor_dag(rng, 2 + trial % 9, 20);
    const ArcPartition p = classify_arcs(g);
    EXPECT_EQ(p.nonbasic.size(), g.num_vertices() - 2);
    EXPECT_EQ(p.basic.size(), g.num_arcs() - g.num_vertices() + 2);
  }
}

TEST(CriticalPath, Diamond) {
  const Dag g = testing::diamond();
  EXPECT_EQ(critical_path(g, 0).arcs, (std::vector<ArcId>{0, 2}));
  EXPECT_EQ(critical_path(g, 1).arcs, (std::vector<ArcId>{1, 3}));
  EXPECT_THROW(critical_path(g, 2), AssumptionViolated);
}

TEST(CriticalPath, DoubleDiamondUsesSmallestPrefix) {
  const Dag g = testing::double_diamond();
  // a7 = (5,7) is the only out-arc of vertex 5, hence non-basic; a6 = (4,6)
  // is basic.
  const ArcPartition p = classify_arcs(g);
  EXPECT_FALSE(p.is_basic[6]);
  EXPECT_TRUE(p.is_basic[5]);
  // Smallest s-4 path is a1 a3; then a6, then the non-basic a8.
  EXPECT_EQ(critical_path(g, 5).arcs, (std::vector<ArcId>{0, 2, 5, 7}));
}

TEST(CriticalPath, ContainsArcAndEndsNonBasic) {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Dag g = testing::random_corridor_dag(rng, 3 + trial % 8, 20);
    const ArcPartition p = classify_arcs(g);
    for (ArcId e : p.basic) {
      const StPath path = critical_path(g, p, e);
      ASSERT_TRUE(is_st_path(g, path.arcs));
      const auto it = std::find(path.arcs.begin(), path.arcs.end(), e);
      ASSERT_NE(it, path.arcs.end());
      for (auto f = it + 1; f != path.arcs.end(); ++f) EXPECT_FALSE(p.is_basic[*f]);
    }
  }
}

// Critical-path incidences restricted to basic arcs, in partition order,
// form a unit lower-triangular matrix.
TEST(CriticalPath, IncidenceMatrixIsUnitLowerTriangular) {
  Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const Dag g = testing::random_corridor_dag(rng, 3 + trial % 8, 20);
    const ArcPartition p = classify_arcs(g);
    for (std::size_t r = 0; r < p.basic.size(); ++r) {
      const StPath path = critical_path(g, p, p.basic[r]);
      for (std::size_t c = 0; c < p.basic.size(); ++c) {
        const bool in = path.contains(p.basic[c]);
        if (c == r) EXPECT_TRUE(in);
        if (c > r) EXPECT_FALSE(in) << "row " << r << " col " << c;
      }
    }
  }
}

TEST(ForbiddenPairs, Diamond) {
  const auto pairs = forbidden_pairs(testing::diamond());
  EXPECT_EQ(pairs, (std::vector<std::pair<ArcId, ArcId>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
}

TEST(ForbiddenPairs, SinglePathIsEmpty) {
  EXPECT_TRUE(forbidden_pairs(Dag(4, {{0, 1}, {1, 2}, {2, 3}}, 0, 3)).empty());
}

TEST(ForbiddenPairs, SoundOnTournamentAndRandomGraphs) {
  std::vector<Dag> graphs{generate_tournament(5).graph};
  Rng rng(9);
  for (int trial = 0; trial < 60; ++trial) graphs.push_back(testing::random_corridor_dag(rng, 3 + trial % 8, 20));
  for (const Dag& g : graphs) {
    const auto paths = enumerate_st_paths(g);
    for (const auto& [e, f] : forbidden_pairs(g)) {
      for (const StPath& path : paths) EXPECT_FALSE(path.contains(e) && path.contains(f));
    }
  }
}

}  // namespace
}  // namespace quadlin
