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

#include "quadlin/instance.h"

#include <string>

#include "quadlin/errors.h"
#include "quadlin/linalg.h"

namespace quadlin {

void BqpInstance::validate() const {
  const std::size_t m = cost.rows();
  if (cost.cols() != m) throw DimensionMismatch("cost matrix is not square");
  if (constraints.rows() != rhs.size()) {
    throw DimensionMismatch("constraint rows and right-hand side differ in length");
  }
  if (constraints.rows() > 0 && constraints.cols() != m) {
    throw DimensionMismatch("constraint matrix width differs from the variable count");
  }
  if (linear.size() != m) throw DimensionMismatch("linear term length differs from m");
  if (graph && graph->num_arcs() != m) throw DimensionMismatch("graph arc count differs from m");
  if (assignment_size != 0 && assignment_size * assignment_size != m) {
    throw DimensionMismatch("assignment size does not match m");
  }
}

Rational BqpInstance::objective(std::span<const Rational> x) const {
  return quadratic_form(cost, x) + dot(linear, x);
}

void QsppInstance::validate() const {
  const std::size_t m = graph.num_arcs();
  if (cost.rows() != m || cost.cols() != m) {
    throw DimensionMismatch("cost matrix must be " + std::to_string(m) + "x" +
                            std::to_string(m));
  }
  if (!graph.is_corridor()) {
    throw ValidationError("some vertex lies on no s-t path (corridor violation)");
  }
}

Rational QsppInstance::path_cost(const StPath& p) const {
  Rational s = 0;
  for (ArcId e : p.arcs)
    for (ArcId f : p.arcs) s += cost(e, f);
  return s;
}

void LinearizableFamily::add(RationalMatrix q, RationalVector c) {
  if (dimension_ == 0 && matrices_.empty()) dimension_ = q.rows();
  if (q.rows() != dimension_ || q.cols() != dimension_ || c.size() != dimension_) {
    throw DimensionMismatch("family member has the wrong size");
  }
  matrices_.push_back(std::move(q));
  vectors_.push_back(std::move(c));
}

RationalMatrix LinearizableFamily::apply(std::span<const Rational> alpha) const {
  if (alpha.size() != size()) throw DimensionMismatch("alpha length differs from family size");
  RationalMatrix out(dimension_, dimension_);
  for (std::size_t k = 0; k < size(); ++k) {
    if (sgn(alpha[k]) == 0) continue;
    for (std::size_t i = 0; i < dimension_; ++i)
      for (std::size_t j = 0; j < dimension_; ++j) {
        if (sgn(matrices_[k](i, j)) != 0) out(i, j) += alpha[k] * matrices_[k](i, j);
      }
  }
  return out;
}

RationalVector LinearizableFamily::combine(std::span<const Rational> alpha) const {
  if (alpha.size() != size()) throw DimensionMismatch("alpha length differs from family size");
  RationalVector out = zero_vector(dimension_);
  for (std::size_t k = 0; k < size(); ++k)
    for (std::size_t i = 0; i < dimension_; ++i) out[i] += alpha[k] * vectors_[k][i];
  return out;
}

RationalMatrix LinearizableFamily::linearization_matrix() const {
  RationalMatrix c(dimension_, size());
  for (std::size_t k = 0; k < size(); ++k)
    for (std::size_t i = 0; i < dimension_; ++i) c(i, k) = vectors_[k][i];
  return c;
}

BqpInstance qspp_to_bqp(const QsppInstance& q) {
  const Dag& g = q.graph;
  BqpInstance inst;
  inst.constraints = RationalMatrix(g.num_vertices(), g.num_arcs());
  for (ArcId e = 0; e < g.num_arcs(); ++e) {
    inst.constraints(g.arc(e).tail, e) = 1;
    inst.constraints(g.arc(e).head, e) = -1;
  }
  inst.rhs = zero_vector(g.num_vertices());
  inst.rhs[g.source()] = 1;
  inst.rhs[g.target()] = -1;
  inst.cost = q.cost;
  inst.linear = zero_vector(g.num_arcs());
  inst.integral_polytope = true;
  inst.float_entries = q.float_entries;
  inst.graph = g;
  return inst;
}

BqpInstance qap_to_bqp(const QapInstance& qap) {
  const std::size_t n = qap.flow.rows();
  if (qap.flow.cols() != n || qap.distance.rows() != n || qap.distance.cols() != n) {
    throw DimensionMismatch("QAP matrices must be square and of equal size");
  }
  if (n == 0) throw DimensionMismatch("QAP of size zero");
  const std::size_t m = n * n;
  BqpInstance inst;
  // n row-sum constraints, then n-1 column-sum constraints.
  inst.constraints = RationalMatrix(2 * n - 1, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      inst.constraints(i, i * n + j) = 1;
      if (j + 1 < n) inst.constraints(n + j, i * n + j) = 1;
    }
  inst.rhs = RationalVector(2 * n - 1, Rational(1));
  inst.cost = kronecker(qap.flow, qap.distance);
  inst.linear = zero_vector(m);
  inst.integral_polytope = true;
  inst.float_entries = qap.float_entries;
  inst.assignment_size = n;
  return inst;
}

std::pair<RationalMatrix, RationalVector> make_linearizable(const BqpInstance& inst,
                                                            const RationalMatrix& y,
                                                            std::span<const Rational> z,
                                                            bool symmetrize) {
  const std::size_t m = inst.num_vars();
  if (y.rows() != inst.num_rows() || y.cols() != m || z.size() != m) {
    throw DimensionMismatch("make_linearizable: Y must be rows x m and z length m");
  }
  RationalMatrix btY = inst.constraints.transpose() * y;
  RationalMatrix q = symmetrize ? btY + btY.transpose() : btY;
  for (std::size_t i = 0; i < m; ++i) q(i, i) += z[i];
  RationalVector c = y.transpose() * std::span<const Rational>(inst.rhs);
  for (std::size_t i = 0; i < m; ++i) {
    if (symmetrize) c[i] *= 2;
    c[i] += z[i];
  }
  return {std::move(q), std::move(c)};
}

RationalMatrix weak_sum_matrix(std::span<const Rational> a, std::span<const Rational> z) {
  if (a.size() != z.size()) throw DimensionMismatch("weak_sum_matrix: a and z differ in length");
  const std::size_t m = a.size();
  RationalMatrix w(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) w(i, j) = (i == j) ? z[i] : Rational(a[i] + a[j]);
  return w;
}

RationalVector weak_sum_linearization(std::span<const Rational> a, std::span<const Rational> z,
                                      const Rational& cardinality) {
  // x^T M x = sum_{i != j} (a_i + a_j) x_i x_j + z^T x
  //         = 2 (a^T x)(e^T x) - 2 a^T x + z^T x = (2 (d - 1) a + z)^T x.
  RationalVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = 2 * (cardinality - 1) * a[i] + z[i];
  return c;
}

QsppInstance generate_tournament(std::size_t n) {
  if (n < 2) throw ValidationError("tournament needs at least 2 vertices");
  std::vector<Arc> arcs;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) arcs.push_back({i, j});
  const std::size_t m = arcs.size();
  RationalMatrix q(m, m);
  for (ArcId e = 0; e < m; ++e)
    for (ArcId f = 0; f < m; ++f) {
      const std::size_t le = arcs[e].head - arcs[e].tail;
      const std::size_t lf = arcs[f].head - arcs[f].tail;
      if (le == lf) q(e, f) = static_cast<unsigned long>(le * le);
    }
  return QsppInstance{Dag(n, std::move(arcs), 0, n - 1), std::move(q), false};
}

BqpInstance reformulate(const BqpInstance& inst, const RationalMatrix& skew,
                        std::span<const Rational> shift) {
  const std::size_t m = inst.num_vars();
  if (skew.rows() != m || skew.cols() != m || shift.size() != m) {
    throw DimensionMismatch("reformulate: S must be m x m and d length m");
  }
  if (!is_skew_symmetric(skew)) throw NotSkewSymmetric("S + S^T != 0");
  BqpInstance out = inst;
  out.cost = inst.cost + skew;
  for (std::size_t i = 0; i < m; ++i) {
    out.cost(i, i) += shift[i];
    out.linear[i] -= shift[i];
  }
  return out;
}

}  // namespace quadlin
