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

#include "quadlin/bounds.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "quadlin/dag.h"
#include "quadlin/errors.h"
#include "quadlin/linalg.h"

namespace quadlin {

const char* to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::kGL:
      return "GL";
    case BoundMethod::kGGL:
      return "GGL";
    case BoundMethod::kLbbPrime:
      return "LBBPrime";
    case BoundMethod::kRlt1:
      return "RLT1";
    case BoundMethod::kLbbGeneric:
      return "LBBGeneric";
    case BoundMethod::kLbbStar:
      return "LBBStar";
  }
  return "?";
}

const char* to_string(SkewStrategy strategy) {
  switch (strategy) {
    case SkewStrategy::kUpperTriangular:
      return "upper";
    case SkewStrategy::kSymmetrize:
      return "sym";
    case SkewStrategy::kNone:
      return "none";
  }
  return "?";
}

RationalMatrix skew_matrix(const RationalMatrix& q, SkewStrategy strategy) {
  const std::size_t m = q.rows();
  RationalMatrix s(m, m);
  if (strategy == SkewStrategy::kNone) return s;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (strategy == SkewStrategy::kUpperTriangular) {
        s(i, j) = q(j, i);
        s(j, i) = -q(j, i);
      } else {
        s(i, j) = (q(j, i) - q(i, j)) / 2;
        s(j, i) = -s(i, j);
      }
    }
  }
  return s;
}

PairSet sparsity_pairs(const BqpInstance& inst) {
  PairSet pairs;
  const std::size_t m = inst.num_vars();
  if (inst.graph) {
    for (const auto& [e, f] : forbidden_pairs(*inst.graph)) pairs.emplace(e, f);
    return pairs;
  }
  if (inst.assignment_size > 0) {
    const std::size_t n = inst.assignment_size;
    for (std::size_t v = 0; v < m; ++v) {
      for (std::size_t w = v + 1; w < m; ++w) {
        if (v / n == w / n || v % n == w % n) pairs.emplace(v, w);
      }
    }
    return pairs;
  }
  for (std::size_t r = 0; r < inst.num_rows(); ++r) {
    const auto row = inst.constraints.row(r);
    const bool nonneg = std::all_of(row.begin(), row.end(), [](const Rational& a) { return sgn(a) >= 0; });
    const bool nonpos = std::all_of(row.begin(), row.end(), [](const Rational& a) { return sgn(a) <= 0; });
    if (!nonneg && !nonpos) continue;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const Rational sum = row[i] + row[j];
        if ((nonneg && sum > inst.rhs[r]) || (nonpos && sum < inst.rhs[r])) pairs.emplace(i, j);
      }
    }
  }
  return pairs;
}

namespace {

bool excluded(const PairSet* sparsity, std::size_t i, std::size_t j) {
  if (sparsity == nullptr || i == j) return false;
  return sparsity->count({std::min(i, j), std::max(i, j)}) > 0;
}

LpSolution solve_or_throw(const LinearProgram& lp, SolveMode mode, const std::string& what) {
  LpSolution sol = solve_lp(lp, mode);
  if (sol.status != LpStatus::kOptimal) {
    throw LpFailure(what + ": LP is " + to_string(sol.status));
  }
  return sol;
}

// min c^T x  s.t.  Bx = b, x >= 0.
LpSolution min_over_relaxation(const BqpInstance& inst, const RationalVector& c, SolveMode mode) {
  LinearProgram lp(Sense::kMinimize);
  const std::size_t m = inst.num_vars();
  for (std::size_t j = 0; j < m; ++j) lp.add_variable(c[j]);
  for (std::size_t r = 0; r < inst.num_rows(); ++r) {
    LpTerms terms;
    for (std::size_t j = 0; j < m; ++j)
      if (sgn(inst.constraints(r, j)) != 0) terms.emplace_back(j, inst.constraints(r, j));
    lp.add_row(std::move(terms), Relation::kEqual, inst.rhs[r]);
  }
  return solve_or_throw(lp, mode, "min over K");
}

// B^T Y + Diag(z).
RationalMatrix gl_matrix(const BqpInstance& inst, const RationalMatrix& y,
                         const RationalVector& z) {
  RationalMatrix q = inst.constraints.transpose() * y;
  for (std::size_t i = 0; i < q.rows(); ++i) q(i, i) += z[i];
  return q;
}

// Y^T b + z.
RationalVector gl_vector(const BqpInstance& inst, const RationalMatrix& y,
                         const RationalVector& z) {
  RationalVector c = y.transpose() * std::span<const Rational>(inst.rhs);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += z[i];
  return c;
}

struct GlStep {
  RationalMatrix y_bar;
  RationalVector z_bar;
  std::size_t lp_iterations = 0;
};

// Column k: max b^T y + z  s.t.  B^T y + e_k z <= W e_k.
GlStep gl_step(const BqpInstance& inst, const RationalMatrix& work, SolveMode mode) {
  const std::size_t m = inst.num_vars();
  const std::size_t rows = inst.num_rows();
  GlStep step{RationalMatrix(rows, m), zero_vector(m), 0};
  for (std::size_t k = 0; k < m; ++k) {
    LinearProgram lp(Sense::kMaximize);
    for (std::size_t r = 0; r < rows; ++r) lp.add_free_variable(inst.rhs[r]);
    const std::size_t zk = lp.add_free_variable(Rational(1));
    for (std::size_t i = 0; i < m; ++i) {
      LpTerms terms;
      for (std::size_t r = 0; r < rows; ++r)
        if (sgn(inst.constraints(r, i)) != 0) terms.emplace_back(r, inst.constraints(r, i));
      if (i == k) terms.emplace_back(zk, Rational(1));
      lp.add_row(std::move(terms), Relation::kLessEqual, work(i, k));
    }
    const LpSolution sol = solve_or_throw(lp, mode, "GL column " + std::to_string(k + 1));
    for (std::size_t r = 0; r < rows; ++r) step.y_bar(r, k) = sol.primal[r];
    step.z_bar[k] = sol.primal[zk];
    step.lp_iterations += sol.iterations;
  }
  return step;
}

bool negligible(const RationalVector& v, SolveMode mode, double tolerance) {
  if (mode == SolveMode::kExact && tolerance == 0.0) {
    return std::all_of(v.begin(), v.end(), [](const Rational& a) { return sgn(a) == 0; });
  }
  Rational sq = 0;
  for (const Rational& a : v) sq += a * a;
  return sq <= Rational(tolerance) * Rational(tolerance);
}

RationalVector plus_linear(const BqpInstance& inst, RationalVector c) {
  for (std::size_t j = 0; j < c.size(); ++j) c[j] += inst.linear[j];
  return c;
}

BoundReport make_report(const BqpInstance& inst, BoundMethod method, SolveMode mode) {
  BoundReport report;
  report.method = method;
  report.mode = mode;
  report.lp_relaxation = !inst.integral_polytope;
  return report;
}

// Column layout shared by LBB' and LBB*: y (rows), Y (rows x m), z (m).
struct LbbLayout {
  std::size_t rows;
  std::size_t m;
  std::size_t y(std::size_t r) const { return r; }
  std::size_t Y(std::size_t r, std::size_t j) const { return rows + r * m + j; }
  std::size_t z(std::size_t j) const { return rows + rows * m + j; }
  std::size_t alpha(std::size_t t) const { return rows + rows * m + m + t; }
};

// Symmetrized family members that are linearly independent (as upper
// triangles), in family order. Zero and dependent members add nothing.
std::vector<std::size_t> independent_members(const LinearizableFamily& family,
                                             std::vector<RationalMatrix>& symmetric) {
  std::vector<std::size_t> kept;
  const std::size_t m = family.dimension();
  RowSpace space(m * (m + 1) / 2);
  symmetric.clear();
  for (std::size_t t = 0; t < family.size(); ++t) {
    RationalMatrix s = symmetric_part(family.matrix(t));
    RationalVector upper;
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (std::size_t j = i; j < s.cols(); ++j) upper.push_back(s(i, j));
    symmetric.push_back(std::move(s));
    if (space.insert(upper)) kept.push_back(t);
  }
  return kept;
}

BoundReport lbb_core(const BqpInstance& inst, const LinearizableFamily* family,
                     const PairSet* sparsity, SolveMode mode) {
  inst.validate();
  const std::size_t m = inst.num_vars();
  const std::size_t rows = inst.num_rows();
  const LbbLayout at{rows, m};
  const RationalMatrix& B = inst.constraints;
  const RationalMatrix q = symmetric_part(inst.cost);

  std::vector<RationalMatrix> sym_members;
  std::vector<std::size_t> members;
  if (family != nullptr) {
    if (family->dimension() != m && family->size() > 0) {
      throw DimensionMismatch("family dimension differs from the instance");
    }
    members = independent_members(*family, sym_members);
  }

  LinearProgram lp(Sense::kMaximize);
  for (std::size_t r = 0; r < rows; ++r) lp.add_free_variable(inst.rhs[r]);
  for (std::size_t k = 0; k < rows * m + m + members.size(); ++k) lp.add_free_variable(0);

  for (std::size_t j = 0; j < m; ++j) {
    LpTerms terms;
    for (std::size_t r = 0; r < rows; ++r) {
      if (sgn(B(r, j)) != 0) terms.emplace_back(at.y(r), B(r, j));
      if (sgn(inst.rhs[r]) != 0) terms.emplace_back(at.Y(r, j), -2 * inst.rhs[r]);
    }
    terms.emplace_back(at.z(j), Rational(-1));
    for (std::size_t t = 0; t < members.size(); ++t) {
      const Rational& c = family->vector(members[t])[j];
      if (sgn(c) != 0) terms.emplace_back(at.alpha(t), -c);
    }
    lp.add_row(std::move(terms), Relation::kLessEqual, inst.linear[j]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      if (excluded(sparsity, i, j)) continue;
      LpTerms terms;
      for (std::size_t r = 0; r < rows; ++r) {
        if (sgn(B(r, i)) != 0) terms.emplace_back(at.Y(r, j), B(r, i));
        if (sgn(B(r, j)) != 0) terms.emplace_back(at.Y(r, i), B(r, j));
      }
      if (i == j) terms.emplace_back(at.z(i), Rational(1));
      for (std::size_t t = 0; t < members.size(); ++t) {
        const Rational& v = sym_members[members[t]](i, j);
        if (sgn(v) != 0) terms.emplace_back(at.alpha(t), v);
      }
      lp.add_row(std::move(terms), Relation::kLessEqual, q(i, j));
    }
  }

  const LpSolution sol = solve_or_throw(lp, mode, family ? "LBB*" : "LBB'");
  BoundReport report = make_report(inst, family ? BoundMethod::kLbbStar : BoundMethod::kLbbPrime, mode);
  report.lp_relaxation = false;
  report.sparsity = sparsity != nullptr;
  report.value = sol.objective;
  report.lp_iterations = sol.iterations;
  report.y.assign(sol.primal.begin(), sol.primal.begin() + rows);
  report.y_matrix = RationalMatrix(rows, m);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j < m; ++j) report.y_matrix(r, j) = sol.primal[at.Y(r, j)];
  report.z.resize(m);
  for (std::size_t j = 0; j < m; ++j) report.z[j] = sol.primal[at.z(j)];
  if (family) {
    report.alpha = zero_vector(family->size());
    for (std::size_t t = 0; t < members.size(); ++t) report.alpha[members[t]] = sol.primal[at.alpha(t)];
    report.label = family->is_spanning() ? "v_LBB*" : "LBBGeneric-augmented";
  } else {
    report.label = "v_LBB'";
  }
  return report;
}

// Tolerant comparisons for certificate checks.
struct Cmp {
  bool exact;
  bool leq(const Rational& a, const Rational& b) const {
    if (exact) return a <= b;
    return a <= b + Rational(1e-6) * (1 + abs(a) + abs(b));
  }
  bool eq(const Rational& a, const Rational& b) const { return leq(a, b) && leq(b, a); }
};

bool check_relaxation_dual(const BqpInstance& inst, const RationalVector& c,
                           const RationalVector& y, const Rational& value, const Cmp& cmp) {
  if (y.size() != inst.num_rows()) return false;
  const RationalVector bty = inst.constraints.transpose() * std::span<const Rational>(y);
  for (std::size_t j = 0; j < c.size(); ++j)
    if (!cmp.leq(bty[j], c[j])) return false;
  return cmp.eq(dot(inst.rhs, y), value);
}

bool verify_gl(const BqpInstance& inst, const BoundReport& report, const Cmp& cmp) {
  const std::size_t m = inst.num_vars();
  RationalMatrix work = inst.cost;
  RationalVector c = zero_vector(m);
  const SkewStrategy strategy = report.strategy.value_or(SkewStrategy::kNone);
  for (const GlIterate& it : report.iterations) {
    const RationalMatrix q_bar = gl_matrix(inst, it.y_bar, it.z_bar);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (!cmp.leq(q_bar(i, j), work(i, j))) return false;
    const RationalVector c_bar = gl_vector(inst, it.y_bar, it.z_bar);
    if (c_bar != it.c_bar) return false;
    work = work - q_bar;
    work = work + skew_matrix(work, strategy);
    for (std::size_t j = 0; j < m; ++j) c[j] += c_bar[j];
  }
  if (report.iterations.empty() || c != report.accumulated_c) return false;
  if (report.iterations.back().bound != report.value) return false;
  return check_relaxation_dual(inst, plus_linear(inst, c), report.y, report.value, cmp);
}

bool verify_lbb(const BqpInstance& inst, const BoundReport& report,
                const LinearizableFamily* family, const Cmp& cmp) {
  const std::size_t m = inst.num_vars();
  const std::size_t rows = inst.num_rows();
  const bool generic = report.method == BoundMethod::kLbbGeneric;
  const bool star = report.method == BoundMethod::kLbbStar;
  if ((generic || star) && family == nullptr) return false;
  if (report.y.size() != rows) return false;

  RationalMatrix bound_q = generic ? inst.cost : symmetric_part(inst.cost);
  RationalMatrix a(m, m);
  RationalVector c(m);
  if (!generic) {
    if (report.y_matrix.rows() != rows || report.y_matrix.cols() != m || report.z.size() != m)
      return false;
    const RationalMatrix bty = inst.constraints.transpose() * report.y_matrix;
    a = bty + bty.transpose() + diag_matrix(report.z);
    c = gl_vector(inst, 2 * report.y_matrix, report.z);
  } else {
    c = zero_vector(m);
  }
  if (generic || star) {
    if (report.alpha.size() != family->size()) return false;
    for (std::size_t t = 0; t < family->size(); ++t) {
      if (sgn(report.alpha[t]) == 0) continue;
      const RationalMatrix member = generic ? family->matrix(t) : symmetric_part(family->matrix(t));
      a = a + report.alpha[t] * member;
      for (std::size_t j = 0; j < m; ++j) c[j] += report.alpha[t] * family->vector(t)[j];
    }
  }
  const PairSet pairs = report.sparsity ? sparsity_pairs(inst) : PairSet{};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = generic ? 0 : i; j < m; ++j) {
      if (report.sparsity && excluded(&pairs, i, j)) continue;
      if (!cmp.leq(a(i, j), bound_q(i, j))) return false;
    }
  }
  return check_relaxation_dual(inst, plus_linear(inst, c), report.y, report.value, cmp);
}

bool verify_rlt(const BqpInstance& inst, const BoundReport& report, const Cmp& cmp) {
  const std::size_t m = inst.num_vars();
  const RationalMatrix& X = report.x_matrix;
  if (X.rows() != m || X.cols() != m || report.x.size() != m) return false;
  const PairSet pairs = report.sparsity ? sparsity_pairs(inst) : PairSet{};
  for (std::size_t i = 0; i < m; ++i) {
    if (report.x[i] != X(i, i)) return false;
    for (std::size_t j = 0; j < m; ++j) {
      if (!cmp.leq(Rational(0), X(i, j))) return false;
      if (report.sparsity && excluded(&pairs, i, j) && !cmp.eq(X(i, j), Rational(0))) return false;
    }
  }
  const RationalMatrix& B = inst.constraints;
  const RationalVector bx = B * std::span<const Rational>(report.x);
  for (std::size_t r = 0; r < inst.num_rows(); ++r)
    if (!cmp.eq(bx[r], inst.rhs[r])) return false;
  const RationalMatrix lhs = B * (X + X.transpose());
  for (std::size_t r = 0; r < inst.num_rows(); ++r)
    for (std::size_t j = 0; j < m; ++j)
      if (!cmp.eq(lhs(r, j), 2 * inst.rhs[r] * report.x[j])) return false;
  const RationalMatrix q = symmetric_part(inst.cost);
  Rational value = dot(inst.linear, report.x);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (sgn(X(i, j)) != 0) value += q(i, j) * X(i, j);
  return cmp.eq(value, report.value);
}

}  // namespace

BoundReport gl_bound(const BqpInstance& inst, SolveMode mode) {
  BoundReport report = ggl_bound(inst, SkewStrategy::kNone, 1, mode);
  report.method = BoundMethod::kGL;
  report.label = "v_GL";
  report.strategy.reset();
  return report;
}

BoundReport ggl_bound(const BqpInstance& inst, SkewStrategy strategy, std::size_t max_iterations,
                      SolveMode mode, std::optional<double> tolerance) {
  inst.validate();
  if (max_iterations == 0) throw ValidationError("GGL needs at least one iteration");
  const double tol = tolerance.value_or(mode == SolveMode::kExact ? 0.0 : 1e-9);
  const std::size_t m = inst.num_vars();
  BoundReport report = make_report(inst, BoundMethod::kGGL, mode);
  report.label = "v_GGL";
  report.strategy = strategy;
  report.accumulated_c = zero_vector(m);

  RationalMatrix work = inst.cost;
  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    GlStep step = gl_step(inst, work, mode);
    GlIterate it;
    it.c_bar = gl_vector(inst, step.y_bar, step.z_bar);
    work = work - gl_matrix(inst, step.y_bar, step.z_bar);
    work = work + skew_matrix(work, strategy);
    for (std::size_t j = 0; j < m; ++j) report.accumulated_c[j] += it.c_bar[j];
    const LpSolution final_lp =
        min_over_relaxation(inst, plus_linear(inst, report.accumulated_c), mode);
    it.bound = final_lp.objective;
    it.y_bar = std::move(step.y_bar);
    it.z_bar = std::move(step.z_bar);
    report.lp_iterations += step.lp_iterations + final_lp.iterations;
    report.value = it.bound;
    report.y = final_lp.dual;
    const bool done = negligible(it.c_bar, mode, tol);
    report.iterations.push_back(std::move(it));
    if (done) break;
  }
  return report;
}

BoundReport lbb_prime(const BqpInstance& inst, const PairSet* sparsity, SolveMode mode) {
  return lbb_core(inst, nullptr, sparsity, mode);
}

BoundReport lbb_star(const BqpInstance& inst, const LinearizableFamily& family,
                     const PairSet* sparsity, SolveMode mode) {
  return lbb_core(inst, &family, sparsity, mode);
}

BoundReport rlt1(const BqpInstance& inst, const PairSet* sparsity, SolveMode mode, RltForm form) {
  inst.validate();
  const std::size_t m = inst.num_vars();
  const std::size_t rows = inst.num_rows();
  const RationalMatrix& B = inst.constraints;
  const RationalMatrix q = symmetric_part(inst.cost);
  const bool full = form == RltForm::kFullMatrix;

  // var(i, j): column of X_ij, kNone when fixed to zero.
  std::vector<std::size_t> var(m * m, kNone);
  LinearProgram lp(Sense::kMinimize);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = full ? 0 : i; j < m; ++j) {
      if (excluded(sparsity, i, j)) continue;
      Rational cost = i == j ? Rational(q(i, i) + inst.linear[i])
                             : Rational(full ? q(i, j) : Rational(2 * q(i, j)));
      var[i * m + j] = lp.add_variable(std::move(cost));
    }
  }
  const auto x_of = [&](std::size_t i, std::size_t j) {
    return full ? var[i * m + j] : var[std::min(i, j) * m + std::max(i, j)];
  };

  for (std::size_t r = 0; r < rows; ++r) {
    LpTerms terms;
    for (std::size_t i = 0; i < m; ++i)
      if (sgn(B(r, i)) != 0) terms.emplace_back(x_of(i, i), B(r, i));
    lp.add_row(std::move(terms), Relation::kEqual, inst.rhs[r]);
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < m; ++j) {
      LpTerms terms;
      for (std::size_t i = 0; i < m; ++i) {
        if (sgn(B(r, i)) == 0) continue;
        if (x_of(i, j) != kNone) terms.emplace_back(x_of(i, j), B(r, i));
        if (full && x_of(j, i) != kNone) terms.emplace_back(x_of(j, i), B(r, i));
      }
      if (sgn(inst.rhs[r]) != 0) {
        terms.emplace_back(x_of(j, j), full ? Rational(-2 * inst.rhs[r]) : Rational(-inst.rhs[r]));
      }
      lp.add_row(std::move(terms), Relation::kEqual, Rational(0));
    }
  }

  const LpSolution sol = solve_or_throw(lp, mode, "RLT1");
  BoundReport report = make_report(inst, BoundMethod::kRlt1, mode);
  report.lp_relaxation = false;
  report.label = "v_RLT1";
  report.sparsity = sparsity != nullptr;
  report.value = sol.objective;
  report.lp_iterations = sol.iterations;
  report.x_matrix = RationalMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!full && j < i) continue;
      const std::size_t v = var[i * m + j];
      if (v == kNone) continue;
      report.x_matrix(i, j) = sol.primal[v];
      if (!full) report.x_matrix(j, i) = sol.primal[v];
    }
  }
  report.x = diagonal_of(report.x_matrix);
  return report;
}

BoundReport lbb_generic(const BqpInstance& inst, const LinearizableFamily& family, SolveMode mode) {
  inst.validate();
  const std::size_t m = inst.num_vars();
  const std::size_t rows = inst.num_rows();
  if (family.size() > 0 && family.dimension() != m) {
    throw DimensionMismatch("family dimension differs from the instance");
  }
  const std::size_t k = family.size();
  LinearProgram lp(Sense::kMaximize);
  for (std::size_t r = 0; r < rows; ++r) lp.add_free_variable(inst.rhs[r]);
  for (std::size_t t = 0; t < k; ++t) lp.add_free_variable(0);
  for (std::size_t j = 0; j < m; ++j) {
    LpTerms terms;
    for (std::size_t r = 0; r < rows; ++r)
      if (sgn(inst.constraints(r, j)) != 0) terms.emplace_back(r, inst.constraints(r, j));
    for (std::size_t t = 0; t < k; ++t) {
      const Rational& c = family.vector(t)[j];
      if (sgn(c) != 0) terms.emplace_back(rows + t, -c);
    }
    lp.add_row(std::move(terms), Relation::kLessEqual, inst.linear[j]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      LpTerms terms;
      for (std::size_t t = 0; t < k; ++t) {
        const Rational& v = family.matrix(t)(i, j);
        if (sgn(v) != 0) terms.emplace_back(rows + t, v);
      }
      lp.add_row(std::move(terms), Relation::kLessEqual, inst.cost(i, j));
    }
  }
  const LpSolution sol = solve_or_throw(lp, mode, "LBB generic");
  BoundReport report = make_report(inst, BoundMethod::kLbbGeneric, mode);
  report.lp_relaxation = false;
  report.label = "v_LBB";
  report.value = sol.objective;
  report.lp_iterations = sol.iterations;
  report.y.assign(sol.primal.begin(), sol.primal.begin() + rows);
  report.alpha.assign(sol.primal.begin() + rows, sol.primal.end());
  return report;
}

bool verify_certificate(const BqpInstance& inst, const BoundReport& report,
                        const LinearizableFamily* family) {
  const Cmp cmp{report.mode == SolveMode::kExact};
  switch (report.method) {
    case BoundMethod::kGL:
    case BoundMethod::kGGL:
      return verify_gl(inst, report, cmp);
    case BoundMethod::kLbbPrime:
    case BoundMethod::kLbbStar:
    case BoundMethod::kLbbGeneric:
      return verify_lbb(inst, report, family, cmp);
    case BoundMethod::kRlt1:
      return verify_rlt(inst, report, cmp);
  }
  return false;
}

namespace {

int chain_rank(BoundMethod method) {
  switch (method) {
    case BoundMethod::kGL:
      return 0;
    case BoundMethod::kGGL:
      return 1;
    case BoundMethod::kLbbPrime:
    case BoundMethod::kRlt1:
      return 2;
    case BoundMethod::kLbbStar:
      return 3;
    case BoundMethod::kLbbGeneric:
      return -1;
  }
  return -1;
}

std::string describe(const BoundReport& r) {
  std::string s = r.label.empty() ? to_string(r.method) : r.label;
  if (r.strategy) s += std::string("[") + to_string(*r.strategy) + "]";
  if (r.sparsity) s += "[G]";
  return s + " = " + compact_string(r.value);
}

}  // namespace

ChainResult verify_chain(const std::vector<BoundReport>& reports, const std::optional<Rational>& opt) {
  ChainResult result;
  const auto cmp_for = [](const BoundReport& a, const BoundReport& b) {
    return Cmp{a.mode == SolveMode::kExact && b.mode == SolveMode::kExact};
  };
  for (const BoundReport& a : reports) {
    for (const BoundReport& b : reports) {
      const int ra = chain_rank(a.method);
      const int rb = chain_rank(b.method);
      if (&a == &b || ra < 0 || rb < 0) continue;
      const Cmp cmp = cmp_for(a, b);
      if (ra < rb && (!a.sparsity || b.sparsity)) {
        if (!cmp.leq(a.value, b.value)) {
          throw ChainViolation("chain violated: " + describe(a) + " exceeds " + describe(b));
        }
        result.checks.push_back(describe(a) + " <= " + describe(b));
      } else if (ra == 2 && rb == 2 && a.method == BoundMethod::kLbbPrime &&
                 b.method == BoundMethod::kRlt1 && a.sparsity == b.sparsity) {
        if (!cmp.eq(a.value, b.value)) {
          throw ChainViolation("chain violated: " + describe(a) + " differs from " + describe(b));
        }
        result.checks.push_back(describe(a) + " == " + describe(b));
      }
    }
  }
  if (opt) {
    for (const BoundReport& a : reports) {
      if (!Cmp{a.mode == SolveMode::kExact}.leq(a.value, *opt)) {
        throw ChainViolation("bound exceeds optimum: " + describe(a) + " > OPT = " +
                             compact_string(*opt));
      }
      result.checks.push_back(describe(a) + " <= OPT = " + compact_string(*opt));
    }
  }
  return result;
}

}  // namespace quadlin
