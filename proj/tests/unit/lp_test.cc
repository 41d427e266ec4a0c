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

#include "quadlin/lp.h"
#include "support/generators.h"
#include "support/lp_oracle.h"

namespace quadlin {
namespace {

using testing::Rng;

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

TEST(SolveLp, BoundedByOne) {
  LinearProgram lp;
  lp.add_variable(-1);
  lp.add_row({{0, 1}}, Relation::kLessEqual, 1);
  for (SolveMode mode : {SolveMode::kExact, SolveMode::kFloat}) {
    const LpSolution s = solve_lp(lp, mode);
    ASSERT_EQ(s.status, LpStatus::kOptimal);
    EXPECT_EQ(s.primal[0], 1);
    EXPECT_EQ(s.objective, -1);
    EXPECT_TRUE(verify_solution(lp, s));
  }
}

TEST(SolveLp, Infeasible) {
  LinearProgram lp;
  lp.add_variable(0);
  lp.add_row({{0, 1}}, Relation::kLessEqual, -1);
  EXPECT_EQ(solve_lp(lp).status, LpStatus::kInfeasible);
  EXPECT_EQ(solve_lp(lp, SolveMode::kFloat).status, LpStatus::kInfeasible);
}

TEST(SolveLp, Unbounded) {
  LinearProgram lp;
  lp.add_variable(-1);
  EXPECT_EQ(solve_lp(lp).status, LpStatus::kUnbounded);
  EXPECT_EQ(solve_lp(lp, SolveMode::kFloat).status, LpStatus::kUnbounded);
}

TEST(SolveLp, DualSigns) {
  // min x + y s.t. x + y >= 2, x <= 5: y_1 = 1 on the >= row, 0 on the slack row.
  LinearProgram lp;
  lp.add_variable(1);
  lp.add_variable(1);
  lp.add_row({{0, 1}, {1, 1}}, Relation::kGreaterEqual, 2);
  lp.add_row({{0, 1}}, Relation::kLessEqual, 5);
  const LpSolution s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective, 2);
  EXPECT_EQ(s.dual, (RationalVector{1, 0}));

  LinearProgram mx(Sense::kMaximize);
  mx.add_variable(3);
  mx.add_row({{0, 2}}, Relation::kLessEqual, 4);
  const LpSolution t = solve_lp(mx);
  EXPECT_EQ(t.objective, 6);
  EXPECT_EQ(t.dual, (RationalVector{q(3, 2)}));
}

TEST(VerifySolution, RejectsPerturbedPrimal) {
  LinearProgram lp;
  lp.add_variable(-1);
  lp.add_variable(-2);
  lp.add_row({{0, 1}, {1, 1}}, Relation::kLessEqual, 4);
  lp.add_row({{0, 1}, {1, 3}}, Relation::kLessEqual, 6);
  LpSolution s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective, -5);
  EXPECT_TRUE(verify_solution(lp, s));
  s.primal[0] += q(1, 1000);
  EXPECT_FALSE(verify_solution(lp, s));
  LpSolution f = solve_lp(lp, SolveMode::kFloat);
  EXPECT_TRUE(verify_solution(lp, f));
  f.primal[1] += 1;
  EXPECT_FALSE(verify_solution(lp, f));
}

TEST(VerifySolution, RejectsWrongDual) {
  LinearProgram lp;
  lp.add_variable(-1);
  lp.add_row({{0, 1}}, Relation::kLessEqual, 1);
  LpSolution s = solve_lp(lp);
  s.dual[0] = 1;
  EXPECT_FALSE(verify_solution(lp, s));
}

// Beale's example cycles under the textbook largest-coefficient rule.
TEST(SolveLp, BealeTerminates) {
  LinearProgram lp;
  lp.add_variable(q(-3, 4));
  lp.add_variable(150);
  lp.add_variable(q(-1, 50));
  lp.add_variable(6);
  lp.add_row({{0, q(1, 4)}, {1, -60}, {2, q(-1, 25)}, {3, 9}}, Relation::kLessEqual, 0);
  lp.add_row({{0, q(1, 2)}, {1, -90}, {2, q(-1, 50)}, {3, 3}}, Relation::kLessEqual, 0);
  lp.add_row({{2, 1}}, Relation::kLessEqual, 1);
  for (SolveMode mode : {SolveMode::kExact, SolveMode::kFloat}) {
    const LpSolution s = solve_lp(lp, mode);
    ASSERT_EQ(s.status, LpStatus::kOptimal);
    EXPECT_NEAR(to_double(s.objective), -0.05, 1e-12);
    EXPECT_TRUE(verify_solution(lp, s));
  }
  EXPECT_EQ(solve_lp(lp).objective, q(-1, 20));
}

TEST(SolveLp, HighlyDegenerateSuite) {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    LinearProgram lp(Sense::kMaximize);
    const std::size_t n = 3 + trial % 2;
    for (std::size_t j = 0; j < n; ++j) lp.add_variable(testing::uniform_int(rng, -2, 4), Rational(0), Rational(5));
    for (int i = 0; i < 8; ++i) {
      LpTerms t;
      for (std::size_t j = 0; j < n; ++j) t.emplace_back(j, testing::uniform_int(rng, -3, 3));
      lp.add_row(t, Relation::kLessEqual, 0);
    }
    const LpSolution s = solve_lp(lp);
    ASSERT_EQ(s.status, LpStatus::kOptimal);
    EXPECT_TRUE(verify_solution(lp, s));
    EXPECT_EQ(s.objective, testing::vertex_enumeration(lp, 100).value);
  }
}

TEST(SolveLp, DuplicateAndEmptyRows) {
  LinearProgram lp;
  lp.add_variable(1);
  lp.add_variable(2);
  lp.add_row({{0, 1}, {1, 1}}, Relation::kEqual, 3);
  lp.add_row({{1, 1}, {0, 1}}, Relation::kEqual, 3);
  lp.add_row({}, Relation::kLessEqual, 0);
  const LpSolution s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective, 3);
  EXPECT_EQ(s.dual.size(), 3u);
  EXPECT_TRUE(verify_solution(lp, s));

  lp.add_row({}, Relation::kGreaterEqual, 1);
  EXPECT_EQ(solve_lp(lp).status, LpStatus::kInfeasible);
}

TEST(SolveLp, FreeAndUpperBoundedVariables) {
  // min x - y, x free, y <= 2, x + y >= -1, x >= y - 7: optimum at (-3, 2).
  LinearProgram lp;
  lp.add_free_variable(1);
  lp.add_variable(-1, std::nullopt, Rational(2));
  lp.add_row({{0, 1}, {1, 1}}, Relation::kGreaterEqual, -1);
  lp.add_row({{0, 1}, {1, -1}}, Relation::kGreaterEqual, -7);
  const LpSolution s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective, -5);
  EXPECT_TRUE(verify_solution(lp, s));
}

TEST(SolveLp, Deterministic) {
  Rng rng(32);
  const LinearProgram lp = testing::random_lp(rng, 4, 6);
  const LpSolution a = solve_lp(lp);
  const LpSolution b = solve_lp(lp);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.primal, b.primal);
  EXPECT_EQ(a.dual, b.dual);
}

// Random suite against brute-force vertex enumeration, both modes.
TEST(SolveLp, AgreesWithVertexEnumeration) {
  Rng rng(33);
  int counts[3] = {0, 0, 0};
  for (int trial = 0; trial < 240; ++trial) {
    const LinearProgram lp = testing::random_lp(rng, 1 + trial % 4, 1 + trial % 8);
    const testing::VertexOracleResult oracle = testing::vertex_enumeration(lp);
    ++counts[static_cast<int>(oracle.status)];
    const LpSolution exact = solve_lp(lp, SolveMode::kExact);
    ASSERT_EQ(exact.status, oracle.status) << dump_lp(lp);
    const LpSolution fl = solve_lp(lp, SolveMode::kFloat);
    ASSERT_EQ(fl.status, oracle.status) << dump_lp(lp);
    if (oracle.status == LpStatus::kOptimal) {
      EXPECT_EQ(exact.objective, oracle.value) << dump_lp(lp);
      EXPECT_TRUE(verify_solution(lp, exact));
      EXPECT_EQ(lp.objective_value(exact.primal), exact.objective);
      EXPECT_NEAR(to_double(fl.objective), to_double(oracle.value), 1e-7 * (1 + std::abs(to_double(oracle.value))));
      EXPECT_TRUE(verify_solution(lp, fl));
    }
  }
  // The generator exercises every status.
  EXPECT_GT(counts[0], 20);
  EXPECT_GT(counts[1], 5);
  EXPECT_GT(counts[2], 5);
}

}  // namespace
}  // namespace quadlin
