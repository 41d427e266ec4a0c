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

#include "quadlin/errors.h"
#include "quadlin/instance.h"
#include "quadlin/linearize.h"
#include "quadlin/oracle.h"
#include "support/generators.h"

namespace quadlin {
namespace {

using testing::Rng;

RationalMatrix sym_pair(std::size_t m, std::size_t i, std::size_t j, const Rational& v) {
  RationalMatrix q(m, m);
  q(i, j) = v;
  q(j, i) = v;
  return q;
}

Rational path_sum(const StPath& p, const RationalVector& c) {
  Rational s = 0;
  for (ArcId e : p.arcs) s += c[e];
  return s;
}

TEST(ReduceCostVector, Diamond) {
  const ReducedCostVector r = reduce_cost_vector(testing::diamond(), RationalVector{1, 2, 3, 4});
  EXPECT_EQ(r.entries, (RationalVector{4, 6, 0, 0}));
  EXPECT_EQ(r.nonbasic, (std::vector<ArcId>{2, 3}));
}

TEST(ReduceCostVector, PreservesPathCostsAndZeroesNonBasic) {
  Rng rng(21);
  for (int trial = 0; trial < 80; ++trial) {
    const Dag g = testing::random_corridor_dag(rng, 3 + trial % 7, 16);
    const RationalVector c = testing::random_vector(rng, g.num_arcs(), -6, 6, 3);
    const ReducedCostVector r = reduce_cost_vector(g, c);
    for (ArcId e : r.nonbasic) EXPECT_EQ(r.entries[e], 0);
    for (const StPath& p : enumerate_st_paths(g)) EXPECT_EQ(path_sum(p, r.entries), path_sum(p, c));
  }
}

TEST(PseudoLinearization, Diamond) {
  const ReducedCostVector p = pseudo_linearization(testing::diamond(), sym_pair(4, 0, 2, 1));
  EXPECT_EQ(p.entries, (RationalVector{2, 0, 0, 0}));
}

// p^T x equals x^T Q x on every critical path, and p vanishes off the basic arcs.
TEST(PseudoLinearization, MatchesCriticalPaths) {
  Rng rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const Dag g = testing::random_corridor_dag(rng, 3 + trial % 7, 16);
    RationalMatrix q = testing::random_matrix(rng, g.num_arcs(), g.num_arcs(), -5, 5, 2);
    for (std::size_t i = 0; i < g.num_arcs(); ++i) q(i, i) = 0;
    const ReducedCostVector p = pseudo_linearization(g, q);
    const ArcPartition part = classify_arcs(g);
    for (ArcId e : part.basic) {
      const StPath cp = critical_path(g, part, e);
      EXPECT_EQ(path_sum(cp, p.entries), quadratic_form(q, cp.incidence_vector()));
    }
    for (ArcId e : part.nonbasic) EXPECT_EQ(p.entries[e], 0);
  }
}

TEST(TransformTe, DiamondArcThree) {
  const Dag g = testing::diamond();
  const Dag child = prune_to_corridor(g, 1);
  RationalMatrix q(4, 4);
  q(2, 0) = 3;
  q(0, 2) = 4;
  const RationalVector c{5, 6, 7, 8};
  const RationalVector out = transform_te(g, child, q, c, 2);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], Rational(5 - 7 + 7));
}

TEST(LinearizeQspp, DiamondAnyCost) {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const RationalMatrix q = testing::random_matrix(rng, 4, 4, -5, 5, 2);
    const LinearizationOutcome out = linearize_qspp(QsppInstance{testing::diamond(), q, false});
    ASSERT_TRUE(out.linearizable());
    const RationalVector& c = out.linearization->entries;
    // Path {a1,a3} costs q11+q33+q13+q31, path {a2,a4} costs q22+q44+q24+q42.
    EXPECT_EQ(c[0], q(0, 0) + q(2, 2) + q(0, 2) + q(2, 0));
    EXPECT_EQ(c[1], q(1, 1) + q(3, 3) + q(1, 3) + q(3, 1));
    EXPECT_EQ(c[2], 0);
    EXPECT_EQ(c[3], 0);
  }
}

TEST(LinearizeQspp, DoubleDiamondWitness) {
  const QsppInstance inst{testing::double_diamond(), sym_pair(8, 0, 6, 1), false};
  const LinearizationOutcome out = linearize_qspp(inst);
  ASSERT_FALSE(out.linearizable());
  ASSERT_TRUE(out.witness.has_value());
  EXPECT_NE(out.witness->transformed, out.witness->expected);
  EXPECT_FALSE(path_system_consistent(inst));
}

TEST(LinearizeQspp, ConstructedInstancesOnTournamentEight) {
  Rng rng(24);
  const QsppInstance t = generate_tournament(8);
  const BqpInstance b = qspp_to_bqp(t);
  for (int trial = 0; trial < 4; ++trial) {
    const RationalMatrix y = testing::random_matrix(rng, b.num_rows(), b.num_vars(), -3, 3, 2);
    const RationalVector z = testing::random_vector(rng, b.num_vars(), -3, 3);
    const auto [q, c] = make_linearizable(b, y, z, trial % 2 == 1);
    const QsppInstance inst{t.graph, q, false};
    const LinearizationOutcome out = linearize_qspp(inst);
    ASSERT_TRUE(out.linearizable());
    EXPECT_TRUE(is_linearization(inst, q, out.linearization->entries));
  }
}

TEST(LinearizeQspp, AgreesWithPathSystemOnRandomPerturbations) {
  Rng rng(25);
  int rejected = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Dag g = trial % 3 == 0 ? testing::double_diamond()
                                 : testing::random_corridor_dag(rng, 4 + trial % 5, 14);
    const std::size_t m = g.num_arcs();
    const BqpInstance b = qspp_to_bqp(QsppInstance{g, RationalMatrix(m, m), false});
    auto [q, c] = make_linearizable(b, testing::random_matrix(rng, b.num_rows(), m, -3, 3),
                                    testing::random_vector(rng, m, -3, 3), false);
    if (m > 1) {
      const std::size_t i = testing::uniform_int(rng, 0, static_cast<int>(m) - 1);
      std::size_t j = testing::uniform_int(rng, 0, static_cast<int>(m) - 2);
      if (j >= i) ++j;
      q(i, j) += testing::uniform_int(rng, 1, 4);
    }
    const QsppInstance inst{g, q, false};
    const LinearizationOutcome out = linearize_qspp(inst);
    EXPECT_EQ(out.linearizable(), path_system_consistent(inst));
    if (out.linearizable()) {
      EXPECT_TRUE(is_linearization(inst, q, out.linearization->entries));
    } else {
      ++rejected;
    }
  }
  EXPECT_GT(rejected, 0);
}

TEST(LinearizeQspp, RejectsNonCorridor) {
  const Dag g(4, {{0, 1}, {1, 3}, {0, 2}}, 0, 3);
  EXPECT_THROW(linearize_qspp(QsppInstance{g, RationalMatrix(3, 3), false}), AssumptionViolated);
}

TEST(SpanningSet, DiamondAndDoubleDiamond) {
  EXPECT_EQ(spanning_set(testing::diamond()).dimension(), 12u);
  EXPECT_EQ(spanning_set(testing::double_diamond()).dimension(), 55u);
}

TEST(SpanningSet, SinglePathSpansEverything) {
  const Dag g(4, {{0, 1}, {1, 2}, {2, 3}}, 0, 3);
  EXPECT_EQ(spanning_set(g).dimension(), 6u);
}

// Frozen from the enumeration oracle.
TEST(SpanningSet, TournamentSix) {
  const QsppInstance t = generate_tournament(6);
  EXPECT_EQ(spanning_set(t.graph).dimension(), 205u);
  EXPECT_EQ(enumerated_linearizable_dimension(qspp_to_bqp(t)), 205u);
}

TEST(SpanningSet, DimensionMatchesEnumerationOracle) {
  Rng rng(26);
  for (int trial = 0; trial < 25; ++trial) {
    const Dag g = testing::random_corridor_dag(rng, 3 + trial % 6, 12);
    const std::size_t m = g.num_arcs();
    EXPECT_EQ(spanning_set(g).dimension(),
              enumerated_linearizable_dimension(qspp_to_bqp(QsppInstance{g, RationalMatrix(m, m), false})));
  }
}

TEST(SpanningSet, MembersAreLinearizableAndZeroDiagonal) {
  const SpanningSet s = spanning_set(testing::double_diamond());
  const QsppInstance base{testing::double_diamond(), RationalMatrix(8, 8), false};
  for (std::size_t k = 0; k < s.dimension(); ++k) {
    for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(s.matrices[k](i, i), 0);
    EXPECT_TRUE(is_linearization(base, s.matrices[k], s.vectors[k]));
  }
  EXPECT_TRUE(s.as_family().is_spanning());
}

TEST(SpanningSet, MembershipAgreesWithVerdict) {
  Rng rng(27);
  const Dag g = testing::double_diamond();
  const SpanningSet s = spanning_set(g);
  const BqpInstance b = qspp_to_bqp(QsppInstance{g, RationalMatrix(8, 8), false});
  for (int trial = 0; trial < 40; ++trial) {
    RationalMatrix q = trial % 2 == 0
                           ? make_linearizable(b, testing::random_matrix(rng, 7, 8, -2, 2),
                                               zero_vector(8), true).first
                           : testing::random_matrix(rng, 8, 8, -2, 2, 1);
    for (std::size_t i = 0; i < 8; ++i) q(i, i) = 0;
    EXPECT_EQ(in_span(s, q), linearize_qspp(QsppInstance{g, q, false}).linearizable());
  }
  EXPECT_FALSE(in_span(s, sym_pair(8, 0, 6, 1)));
}

}  // namespace
}  // namespace quadlin
