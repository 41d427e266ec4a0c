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

#ifndef QUADLIN_BOUNDS_H_
#define QUADLIN_BOUNDS_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quadlin/instance.h"
#include "quadlin/lp.h"
#include "quadlin/matrix.h"
#include "quadlin/rational.h"

namespace quadlin {

// Lower bounds on min_{x in K} x^T Q x + l^T x. Every bound is the optimum
// of one or more LPs; the LP certificate needed to re-check the value is
// kept in the report.

enum class BoundMethod { kGL, kGGL, kLbbPrime, kRlt1, kLbbGeneric, kLbbStar };
const char* to_string(BoundMethod method);

enum class SkewStrategy { kUpperTriangular, kSymmetrize, kNone };
const char* to_string(SkewStrategy strategy);

// RLT1 constraint layout: upper triangle of a symmetric X with BX = bx^T, or
// a full X with B(X + X^T) = 2bx^T.
enum class RltForm { kUpperTriangle, kFullMatrix };

// Index pairs (i, j), i < j, with x_i x_j = 0 for every x in K.
using PairSet = std::set<std::pair<std::size_t, std::size_t>>;

// One GL step: Qbar = B^T Ybar + Diag(zbar) <= working matrix, and the
// increment cbar = Ybar^T b + zbar. `bound` is min (c + l)^T x after it.
struct GlIterate {
  RationalMatrix y_bar;  // rows x m, column k from the k-th column LP
  RationalVector z_bar;
  RationalVector c_bar;
  Rational bound;
};

struct BoundReport {
  BoundMethod method = BoundMethod::kGL;
  SolveMode mode = SolveMode::kExact;
  Rational value;
  // K's LP relaxation was not known to be integral: GL/GGL values bound
  // the LP relaxation only.
  bool lp_relaxation = false;
  bool sparsity = false;
  std::string label;  // "v_GL", ..., or "LBBGeneric-augmented"
  std::optional<SkewStrategy> strategy;

  // GL / GGL: accumulated linear costs and the per-iteration trace.
  RationalVector accumulated_c;
  std::vector<GlIterate> iterations;

  // LBB': (Y, z, y). LBB*: (Y, z, alpha, y). LBB generic: (alpha, y).
  // GL / GGL: y is the dual of the final min (c + l)^T x LP.
  RationalMatrix y_matrix;
  RationalVector z;
  RationalVector alpha;
  RationalVector y;

  // RLT1: (x, X).
  RationalVector x;
  RationalMatrix x_matrix;

  std::size_t lp_iterations = 0;
};

// S with S + S^T = 0 for the given strategy. UpperTriangular moves every
// strictly lower entry onto its transpose; Symmetrize gives (Q^T - Q) / 2.
RationalMatrix skew_matrix(const RationalMatrix& q, SkewStrategy strategy);

// Structural sparsity pairs: path conflicts for flow-encoded instances,
// shared row/column for assignment instances, otherwise pairs that violate
// a single constraint row of sign-uniform coefficients.
PairSet sparsity_pairs(const BqpInstance& inst);

BoundReport gl_bound(const BqpInstance& inst, SolveMode mode = SolveMode::kExact);

// Stops when ||cbar|| <= tolerance (0 in exact mode, 1e-9 in float mode by
// default) after the update, or after `max_iterations` steps.
BoundReport ggl_bound(const BqpInstance& inst, SkewStrategy strategy,
                      std::size_t max_iterations = 50, SolveMode mode = SolveMode::kExact,
                      std::optional<double> tolerance = std::nullopt);

BoundReport lbb_prime(const BqpInstance& inst, const PairSet* sparsity = nullptr,
                      SolveMode mode = SolveMode::kExact);

BoundReport rlt1(const BqpInstance& inst, const PairSet* sparsity = nullptr,
                 SolveMode mode = SolveMode::kExact, RltForm form = RltForm::kUpperTriangle);

// max b^T y  s.t.  B^T y <= C alpha + l,  sum_i alpha_i Q_i <= Q (all m^2
// entries). Throws LpFailure when no combination underestimates Q.
BoundReport lbb_generic(const BqpInstance& inst, const LinearizableFamily& family,
                        SolveMode mode = SolveMode::kExact);

// LBB' augmented with the (symmetrized) family members. Labeled v_LBB*
// only when the family is marked spanning.
BoundReport lbb_star(const BqpInstance& inst, const LinearizableFamily& family,
                     const PairSet* sparsity = nullptr, SolveMode mode = SolveMode::kExact);

// Re-checks the stored certificate against the instance: dual feasibility
// and value for the maximization bounds, primal feasibility and value for
// RLT1, the GL identities and final LP dual for GL/GGL. Exact in exact
// mode, tolerance 1e-6 in float mode. `family` is required for LBB*/generic.
bool verify_certificate(const BqpInstance& inst, const BoundReport& report,
                        const LinearizableFamily* family = nullptr);

struct ChainResult {
  std::vector<std::string> checks;  // one line per comparison made
};

// v_GL <= v_GGL <= v_LBB' = v_RLT1 <= v_LBB* (<= opt). Comparisons between
// reports with different sparsity settings are only made in the direction
// sparsity can only raise. Throws ChainViolation naming the offending pair.
ChainResult verify_chain(const std::vector<BoundReport>& reports,
                         const std::optional<Rational>& opt = std::nullopt);

}  // namespace quadlin

#endif  // QUADLIN_BOUNDS_H_
