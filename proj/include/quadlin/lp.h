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

#ifndef QUADLIN_LP_H_
#define QUADLIN_LP_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadlin/rational.h"

namespace quadlin {

enum class Sense { kMinimize, kMaximize };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class SolveMode { kExact, kFloat };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* to_string(SolveMode mode);
const char* to_string(LpStatus status);

using LpTerms = std::vector<std::pair<std::size_t, Rational>>;

struct LpRow {
  LpTerms terms;  // sparse, column ids need not be sorted
  Relation relation;
  Rational rhs;
};

struct LpVariable {
  Rational cost;
  std::optional<Rational> lower;  // nullopt = -infinity
  std::optional<Rational> upper;  // nullopt = +infinity
};

class LinearProgram {
 public:
  explicit LinearProgram(Sense sense = Sense::kMinimize) : sense_(sense) {}

  std::size_t add_variable(Rational cost, std::optional<Rational> lower = Rational(0),
                           std::optional<Rational> upper = std::nullopt);
  std::size_t add_free_variable(Rational cost) {
    return add_variable(std::move(cost), std::nullopt, std::nullopt);
  }
  std::size_t add_row(LpTerms terms, Relation relation, Rational rhs);

  Sense sense() const { return sense_; }
  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_rows() const { return rows_.size(); }
  const LpVariable& variable(std::size_t j) const { return variables_[j]; }
  const LpRow& row(std::size_t i) const { return rows_[i]; }
  const std::vector<LpRow>& rows() const { return rows_; }

  Rational objective_value(const RationalVector& x) const;

 private:
  Sense sense_;
  std::vector<LpVariable> variables_;
  std::vector<LpRow> rows_;
};

// Duals follow the natural sign convention of the stated sense: for a
// minimization, y_i <= 0 on <= rows and y_i >= 0 on >= rows; for a
// maximization the signs flip. In both cases the reduced costs are
// d = c - A^T y, and primal objective = dual objective at optimality.
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  SolveMode mode = SolveMode::kExact;
  RationalVector primal;
  RationalVector dual;
  Rational objective;
  std::size_t iterations = 0;
};

// Two-phase primal simplex on a dense tableau. Pricing is Dantzig's rule
// with a switch to Bland's rule after a run of degenerate pivots, which
// guarantees termination. Float mode throws NumericalBreakdown when the
// result fails verify_solution().
LpSolution solve_lp(const LinearProgram& lp, SolveMode mode = SolveMode::kExact);

// Independent KKT check: primal feasibility, dual sign feasibility, and
// equal primal and dual objectives. Exact in exact mode; relative tolerance
// `tolerance` in float mode.
bool verify_solution(const LinearProgram& lp, const LpSolution& sol, double tolerance = 1e-7);

// Plain-text rendering for debugging, one row per line.
std::string dump_lp(const LinearProgram& lp);

}  // namespace quadlin

#endif  // QUADLIN_LP_H_
