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

#ifndef QUADLIN_INSTANCE_H_
#define QUADLIN_INSTANCE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "quadlin/dag.h"
#include "quadlin/matrix.h"
#include "quadlin/rational.h"

namespace quadlin {

// min x^T Q x + linear^T x  over  K = {x in {0,1}^m : Bx = b}.
//
// `graph` / `assignment_size` remember where an encoded instance came from so
// that the feasible set can be enumerated structurally (paths, permutations)
// instead of over all binary vectors.
struct BqpInstance {
  RationalMatrix constraints;  // B, rows x m
  RationalVector rhs;          // b
  RationalMatrix cost;         // Q, m x m
  RationalVector linear;       // l, length m (zeros when absent)

  // {x >= 0 : Bx = b} has only integral vertices (set by the encoders).
  bool integral_polytope = false;
  // Some entry came from a decimal literal; exact-only operations refuse it.
  bool float_entries = false;

  std::optional<Dag> graph;
  std::size_t assignment_size = 0;

  std::size_t num_vars() const { return cost.rows(); }
  std::size_t num_rows() const { return constraints.rows(); }

  // Throws DimensionMismatch when the pieces do not fit together.
  void validate() const;

  // Objective x^T Q x + l^T x.
  Rational objective(std::span<const Rational> x) const;
};

// QSPP on a DAG: min sum_{e,f} q_{ef} x_e x_f over s-t path incidence vectors.
struct QsppInstance {
  Dag graph;
  RationalMatrix cost;
  bool float_entries = false;

  // Throws DimensionMismatch, or ValidationError when the graph is not a
  // corridor (some vertex on no s-t path).
  void validate() const;
  Rational path_cost(const StPath& p) const;
};

// Koopmans-Beckmann data: flows A (facilities) and distances D (locations).
struct QapInstance {
  RationalMatrix flow;
  RationalMatrix distance;
  bool float_entries = false;
};

// A set of linearizable matrices Q_i with linearization vectors c_i.
class LinearizableFamily {
 public:
  LinearizableFamily() = default;
  explicit LinearizableFamily(std::size_t dimension) : dimension_(dimension) {}

  void add(RationalMatrix q, RationalVector c);

  std::size_t size() const { return matrices_.size(); }
  bool empty() const { return matrices_.empty(); }
  std::size_t dimension() const { return dimension_; }
  const RationalMatrix& matrix(std::size_t i) const { return matrices_[i]; }
  const RationalVector& vector(std::size_t i) const { return vectors_[i]; }

  // sum_i alpha_i Q_i.
  RationalMatrix apply(std::span<const Rational> alpha) const;
  // C alpha = sum_i alpha_i c_i.
  RationalVector combine(std::span<const Rational> alpha) const;
  // m x k matrix C = [c_1, ..., c_k].
  RationalMatrix linearization_matrix() const;

  // The family spans every linearizable matrix of its instance.
  bool is_spanning() const { return spanning_; }
  void set_spanning(bool spanning) { spanning_ = spanning; }

 private:
  std::size_t dimension_ = 0;
  std::vector<RationalMatrix> matrices_;
  std::vector<RationalVector> vectors_;
  bool spanning_ = false;
};

// Flow encoding: one row per vertex (+1 out-arcs, -1 in-arcs), b = e_s - e_t.
BqpInstance qspp_to_bqp(const QsppInstance& q);

// Assignment encoding with x_{ij} at index i*n + j (facility i, location j)
// and Q = A (x) D; the last column-sum row is dropped as redundant.
BqpInstance qap_to_bqp(const QapInstance& qap);

// Q = B^T Y + Diag(z), c = Y^T b + z; with `symmetrize`,
// Q = B^T Y + Y^T B + Diag(z), c = 2 Y^T b + z.
std::pair<RationalMatrix, RationalVector> make_linearizable(const BqpInstance& inst,
                                                            const RationalMatrix& y,
                                                            std::span<const Rational> z,
                                                            bool symmetrize);

// M_ij = a_i + a_j (i != j), M_ii = z_i.
RationalMatrix weak_sum_matrix(std::span<const Rational> a, std::span<const Rational> z);

// Linearization vector of weak_sum_matrix(a, z) when e^T x = d on K:
// x^T M x = 2 (a^T x)(d - 1) + z^T x.
RationalVector weak_sum_linearization(std::span<const Rational> a, std::span<const Rational> z,
                                      const Rational& cardinality);

// Complete DAG on n vertices (arcs (i,j), i < j, in lexicographic order),
// s = 1, t = n, q_{ef} = |i-j|^2 when the two arcs have equal length |i-j|
// (diagonal included), 0 otherwise.
QsppInstance generate_tournament(std::size_t n);

// Q' = Q + S + Diag(d), l' = l - d. Throws NotSkewSymmetric.
BqpInstance reformulate(const BqpInstance& inst, const RationalMatrix& skew,
                        std::span<const Rational> shift);

}  // namespace quadlin

#endif  // QUADLIN_INSTANCE_H_
