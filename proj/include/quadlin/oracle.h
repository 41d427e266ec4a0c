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

#ifndef QUADLIN_ORACLE_H_
#define QUADLIN_ORACLE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "quadlin/instance.h"
#include "quadlin/matrix.h"
#include "quadlin/rational.h"

namespace quadlin {

// Brute-force oracles over explicitly enumerated feasible sets. They are
// deliberately naive and share no code with the linearization or bound
// algorithms they are used to check.

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

// Every x in K, as 0/1 rational vectors. Paths for flow-encoded instances,
// permutations for assignment-encoded ones, a pruned depth-first search over
// binary vectors otherwise. Throws PathExplosion / EnumerationTooLarge.
std::vector<RationalVector> feasible_points(const BqpInstance& inst,
                                            std::size_t cap = kDefaultEnumerationCap);

struct OptResult {
  Rational value;
  RationalVector minimizer;
  std::size_t points = 0;  // feasible points evaluated
};

// Exact min of x^T Q x + l^T x over K. Throws LpFailure-free errors only:
// EnumerationTooLarge / PathExplosion, or ValidationError when K is empty.
OptResult brute_force_opt(const BqpInstance& inst, std::size_t cap = kDefaultEnumerationCap);
OptResult brute_force_opt(const QsppInstance& inst, std::size_t cap = kDefaultEnumerationCap);

// x^T Q x == c^T x for every x in K (exact).
bool is_linearization(const BqpInstance& inst, const RationalMatrix& q,
                      std::span<const Rational> c, std::size_t cap = kDefaultEnumerationCap);
bool is_linearization(const QsppInstance& inst, const RationalMatrix& q,
                      std::span<const Rational> c, std::size_t cap = kDefaultEnumerationCap);

// The all-paths system  sum_{e in P} c_e = P^T Q P  (one row per s-t path)
// has a solution c, i.e. Q is linearizable. Decided by an exact rank test.
bool path_system_consistent(const QsppInstance& inst, std::size_t cap = kDefaultEnumerationCap);

// Dimension of the space of zero-diagonal linearizable matrices, computed
// from the enumerated feasible set: the projection onto vec(Q) of the
// solution space of { x^T Q x - c^T x = 0 for all x in K }.
std::size_t enumerated_linearizable_dimension(const BqpInstance& inst,
                                              std::size_t cap = kDefaultEnumerationCap);

// Spanning set of all linearizable matrices found by brute force: the null
// space of the system above, restricted to symmetric Q (upper-triangle
// coordinates incl. the diagonal) since x^T Q x only sees Q + Q^T. Each
// member is returned with a linearization vector. Marked spanning.
LinearizableFamily enumerated_spanning_set(const BqpInstance& inst,
                                           std::size_t cap = kDefaultEnumerationCap);

}  // namespace quadlin

#endif  // QUADLIN_ORACLE_H_
