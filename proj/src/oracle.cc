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

#include "quadlin/oracle.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "quadlin/errors.h"
#include "quadlin/linalg.h"

namespace quadlin {
namespace {

std::size_t factorial_capped(std::size_t n, std::size_t cap) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (f > cap / i) return cap + 1;
    f *= i;
  }
  return f;
}

std::vector<RationalVector> permutation_points(std::size_t n, std::size_t cap) {
  if (factorial_capped(n, cap) > cap) {
    throw EnumerationTooLarge(std::to_string(n) + "! permutations exceed the cap");
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<RationalVector> out;
  do {
    RationalVector x = zero_vector(n * n);
    for (std::size_t i = 0; i < n; ++i) x[i * n + perm[i]] = 1;
    out.push_back(std::move(x));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Depth-first search over binary vectors; a branch is cut as soon as some
// row can no longer reach its right-hand side with the remaining variables.
class BinarySearch {
 public:
  BinarySearch(const BqpInstance& inst, std::size_t cap)
      : inst_(inst), cap_(cap), node_budget_(cap * 64 + 1024) {
    const std::size_t rows = inst.num_rows();
    const std::size_t m = inst.num_vars();
    pos_suffix_.assign(rows, RationalVector(m + 1, Rational(0)));
    neg_suffix_.assign(rows, RationalVector(m + 1, Rational(0)));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t j = m; j-- > 0;) {
        const Rational& a = inst.constraints(r, j);
        pos_suffix_[r][j] = pos_suffix_[r][j + 1] + (sgn(a) > 0 ? a : Rational(0));
        neg_suffix_[r][j] = neg_suffix_[r][j + 1] + (sgn(a) < 0 ? a : Rational(0));
      }
    }
    partial_ = zero_vector(rows);
    x_ = zero_vector(m);
  }

  std::vector<RationalVector> run() {
    visit(0);
    return std::move(out_);
  }

 private:
  bool viable(std::size_t next) const {
    for (std::size_t r = 0; r < inst_.num_rows(); ++r) {
      const Rational lo = partial_[r] + neg_suffix_[r][next];
      const Rational hi = partial_[r] + pos_suffix_[r][next];
      if (inst_.rhs[r] < lo || inst_.rhs[r] > hi) return false;
    }
    return true;
  }

  void visit(std::size_t j) {
    if (++nodes_ > node_budget_) {
      throw EnumerationTooLarge("binary search exceeded its node budget");
    }
    if (!viable(j)) return;
    if (j == inst_.num_vars()) {
      if (out_.size() >= cap_) throw EnumerationTooLarge("feasible set exceeds the cap");
      out_.push_back(x_);
      return;
    }
    visit(j + 1);
    x_[j] = 1;
    for (std::size_t r = 0; r < inst_.num_rows(); ++r) partial_[r] += inst_.constraints(r, j);
    visit(j + 1);
    for (std::size_t r = 0; r < inst_.num_rows(); ++r) partial_[r] -= inst_.constraints(r, j);
    x_[j] = 0;
  }

  const BqpInstance& inst_;
  std::size_t cap_;
  std::size_t node_budget_;
  std::size_t nodes_ = 0;
  std::vector<RationalVector> pos_suffix_;
  std::vector<RationalVector> neg_suffix_;
  RationalVector partial_;
  RationalVector x_;
  std::vector<RationalVector> out_;
};

}  // namespace

std::vector<RationalVector> feasible_points(const BqpInstance& inst, std::size_t cap) {
  inst.validate();
  if (inst.graph) {
    std::vector<RationalVector> out;
    for (const StPath& p : enumerate_st_paths(*inst.graph, cap)) {
      out.push_back(p.incidence_vector());
    }
    return out;
  }
  if (inst.assignment_size != 0) return permutation_points(inst.assignment_size, cap);
  return BinarySearch(inst, cap).run();
}

OptResult brute_force_opt(const BqpInstance& inst, std::size_t cap) {
  const auto points = feasible_points(inst, cap);
  if (points.empty()) throw ValidationError("feasible set is empty");
  OptResult best;
  best.points = points.size();
  bool first = true;
  for (const auto& x : points) {
    Rational v = inst.objective(x);
    if (first || v < best.value) {
      best.value = v;
      best.minimizer = x;
      first = false;
    }
  }
  return best;
}

OptResult brute_force_opt(const QsppInstance& inst, std::size_t cap) {
  const auto paths = enumerate_st_paths(inst.graph, cap);
  if (paths.empty()) throw ValidationError("no s-t path");
  OptResult best;
  best.points = paths.size();
  bool first = true;
  for (const StPath& p : paths) {
    Rational v = inst.path_cost(p);
    if (first || v < best.value) {
      best.value = v;
      best.minimizer = p.incidence_vector();
      first = false;
    }
  }
  return best;
}

bool is_linearization(const BqpInstance& inst, const RationalMatrix& q,
                      std::span<const Rational> c, std::size_t cap) {
  if (q.rows() != inst.num_vars() || c.size() != inst.num_vars()) {
    throw DimensionMismatch("is_linearization: size mismatch");
  }
  for (const auto& x : feasible_points(inst, cap)) {
    if (quadratic_form(q, x) != dot(c, x)) return false;
  }
  return true;
}

bool is_linearization(const QsppInstance& inst, const RationalMatrix& q,
                      std::span<const Rational> c, std::size_t cap) {
  const std::size_t m = inst.graph.num_arcs();
  if (q.rows() != m || q.cols() != m || c.size() != m) {
    throw DimensionMismatch("is_linearization: size mismatch");
  }
  for (const StPath& p : enumerate_st_paths(inst.graph, cap)) {
    Rational quad = 0;
    Rational lin = 0;
    for (ArcId e : p.arcs) {
      lin += c[e];
      for (ArcId f : p.arcs) quad += q(e, f);
    }
    if (quad != lin) return false;
  }
  return true;
}

bool path_system_consistent(const QsppInstance& inst, std::size_t cap) {
  const auto paths = enumerate_st_paths(inst.graph, cap);
  const std::size_t m = inst.graph.num_arcs();
  RationalMatrix system(paths.size(), m);
  RationalVector rhs(paths.size());
  for (std::size_t r = 0; r < paths.size(); ++r) {
    for (ArcId e : paths[r].arcs) system(r, e) = 1;
    rhs[r] = inst.path_cost(paths[r]);
  }
  return is_consistent(system, rhs);
}

std::size_t enumerated_linearizable_dimension(const BqpInstance& inst, std::size_t cap) {
  const auto points = feasible_points(inst, cap);
  const std::size_t m = inst.num_vars();
  // Unknowns: off-diagonal entries of Q (row-major, i != j), then c.
  const std::size_t offdiag = m * m - m;
  RationalMatrix system(points.size(), offdiag + m);
  RationalMatrix incidence(points.size(), m);
  for (std::size_t r = 0; r < points.size(); ++r) {
    const auto& x = points[r];
    std::size_t col = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        system(r, col++) = x[i] * x[j];
      }
    for (std::size_t i = 0; i < m; ++i) {
      system(r, offdiag + i) = -x[i];
      incidence(r, i) = x[i];
    }
  }
  const std::size_t null_dim = offdiag + m - rank(system);
  const std::size_t pure_c = m - rank(incidence);
  return null_dim - pure_c;
}

LinearizableFamily enumerated_spanning_set(const BqpInstance& inst, std::size_t cap) {
  const auto points = feasible_points(inst, cap);
  const std::size_t m = inst.num_vars();
  std::vector<std::pair<std::size_t, std::size_t>> coords;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) coords.emplace_back(i, j);
  const std::size_t nq = coords.size();
  RationalMatrix system(points.size(), nq + m);
  for (std::size_t r = 0; r < points.size(); ++r) {
    const auto& x = points[r];
    for (std::size_t k = 0; k < nq; ++k) {
      const auto [i, j] = coords[k];
      system(r, k) = (i == j) ? x[i] : Rational(2 * x[i] * x[j]);
    }
    for (std::size_t i = 0; i < m; ++i) system(r, nq + i) = -x[i];
  }
  LinearizableFamily family(m);
  RowSpace seen(nq);
  for (RationalVector& v : null_space_basis(system)) {
    RationalVector q_part(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(nq));
    if (!seen.insert(q_part)) continue;
    RationalMatrix q(m, m);
    for (std::size_t k = 0; k < nq; ++k) {
      const auto [i, j] = coords[k];
      q(i, j) = v[k];
      q(j, i) = v[k];
    }
    RationalVector c(v.begin() + static_cast<std::ptrdiff_t>(nq), v.end());
    family.add(std::move(q), std::move(c));
  }
  family.set_spanning(true);
  return family;
}

}  // namespace quadlin
