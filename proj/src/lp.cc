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

#include "quadlin/lp.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>

#include "quadlin/dag.h"
#include "quadlin/errors.h"

namespace quadlin {

const char* to_string(SolveMode mode) { return mode == SolveMode::kExact ? "exact" : "float"; }

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "?";
}

std::size_t LinearProgram::add_variable(Rational cost, std::optional<Rational> lower,
                                        std::optional<Rational> upper) {
  if (lower && upper && *lower > *upper) throw ValidationError("variable bounds cross");
  variables_.push_back({std::move(cost), std::move(lower), std::move(upper)});
  return variables_.size() - 1;
}

std::size_t LinearProgram::add_row(LpTerms terms, Relation relation, Rational rhs) {
  for (const auto& [j, a] : terms) {
    if (j >= variables_.size()) throw DimensionMismatch("row references an unknown variable");
  }
  rows_.push_back({std::move(terms), relation, std::move(rhs)});
  return rows_.size() - 1;
}

Rational LinearProgram::objective_value(const RationalVector& x) const {
  Rational s = 0;
  for (std::size_t j = 0; j < variables_.size(); ++j) {
    if (sgn(variables_[j].cost) != 0) s += variables_[j].cost * x[j];
  }
  return s;
}

namespace {

template <typename T>
struct Num;

template <>
struct Num<Rational> {
  static bool zero(const Rational& x) { return sgn(x) == 0; }
  static bool exactly_zero(const Rational& x) { return sgn(x) == 0; }
  static bool pos(const Rational& x) { return sgn(x) > 0; }
  static bool neg(const Rational& x) { return sgn(x) < 0; }
  static Rational abs(const Rational& x) { return ::abs(x); }
  static Rational from(const Rational& q) { return q; }
  static Rational exact(const Rational& x) { return x; }
  static void flush(Rational&) {}
};

template <>
struct Num<double> {
  static constexpr double kEps = 1e-9;
  static bool zero(double x) { return std::fabs(x) <= kEps; }
  static bool exactly_zero(double x) { return x == 0.0; }
  static bool pos(double x) { return x > kEps; }
  static bool neg(double x) { return x < -kEps; }
  static double abs(double x) { return std::fabs(x); }
  static double from(const Rational& q) { return q.get_d(); }
  static Rational exact(double x) { return Rational(x); }
  static void flush(double& x) {
    if (std::fabs(x) < 1e-13) x = 0.0;
  }
};

// Merges duplicate column ids and drops zero coefficients.
LpTerms normalize_terms(const LpTerms& terms) {
  std::map<std::size_t, Rational> merged;
  for (const auto& [j, a] : terms) merged[j] += a;
  LpTerms out;
  for (auto& [j, a] : merged)
    if (sgn(a) != 0) out.emplace_back(j, a);
  return out;
}

// min cost^T x  s.t.  rows (with slack/artificial columns) = rhs >= 0,
// x >= 0 except free columns.
struct StandardForm {
  struct VarMap {
    std::size_t col;
    Rational offset;
    int sign;
  };
  std::size_t num_rows = 0;
  std::size_t num_cols = 0;
  std::vector<LpTerms> rows;  // includes slack and artificial entries
  RationalVector rhs;
  RationalVector cost;
  std::vector<bool> free_col;
  std::vector<bool> artificial;
  // Column equal to e_i in row i's original form: its reduced cost is -y_i.
  std::vector<std::size_t> unit_col_of_row;
  std::vector<std::size_t> initial_basis;
  std::vector<int> row_sign;
  std::vector<std::size_t> original_row;  // kNone for bound rows
  std::vector<VarMap> vars;
  bool trivially_infeasible = false;
};

StandardForm standardize(const LinearProgram& lp) {
  StandardForm sf;
  const std::size_t n = lp.num_variables();
  const bool maximize = lp.sense() == Sense::kMaximize;

  struct PendingRow {
    LpTerms terms;
    Relation relation;
    Rational rhs;
    std::size_t original;
  };
  std::vector<PendingRow> pending;

  sf.vars.resize(n);
  std::vector<std::pair<std::size_t, Rational>> upper_rows;  // col, width
  for (std::size_t j = 0; j < n; ++j) {
    const LpVariable& v = lp.variable(j);
    StandardForm::VarMap& map = sf.vars[j];
    map.col = j;
    if (v.lower) {
      map.offset = *v.lower;
      map.sign = 1;
      if (v.upper) upper_rows.emplace_back(j, *v.upper - *v.lower);
    } else if (v.upper) {
      map.offset = *v.upper;
      map.sign = -1;
    } else {
      map.offset = 0;
      map.sign = 1;
    }
  }

  // Presolve: substitute bounds, drop empty rows, drop exact duplicates.
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    const LpRow& row = lp.row(i);
    LpTerms terms = normalize_terms(row.terms);
    Rational rhs = row.rhs;
    for (auto& [j, a] : terms) {
      rhs -= a * sf.vars[j].offset;
      if (sf.vars[j].sign < 0) a = -a;
    }
    if (terms.empty()) {
      const int s = sgn(rhs);
      const bool ok = (row.relation == Relation::kEqual && s == 0) ||
                      (row.relation == Relation::kLessEqual && s >= 0) ||
                      (row.relation == Relation::kGreaterEqual && s <= 0);
      if (!ok) sf.trivially_infeasible = true;
      continue;
    }
    std::ostringstream key;
    key << static_cast<int>(row.relation) << '|' << rhs.get_str();
    for (const auto& [j, a] : terms) key << '|' << j << ':' << a.get_str();
    if (!seen.emplace(key.str(), i).second) continue;
    pending.push_back({std::move(terms), row.relation, std::move(rhs), i});
  }
  for (auto& [j, width] : upper_rows) {
    pending.push_back({LpTerms{{j, Rational(1)}}, Relation::kLessEqual, width, kNone});
  }

  // A row whose slack enters with coefficient +1 after sign normalization
  // starts with that slack basic; every other row gets an artificial.
  const std::size_t rows = pending.size();
  std::vector<int> sigma(rows);
  std::size_t num_slack = 0;
  std::size_t num_art = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    const PendingRow& p = pending[i];
    sigma[i] = sgn(p.rhs) < 0 ? -1 : 1;
    const bool slack_basis = p.relation != Relation::kEqual &&
                             (p.relation == Relation::kLessEqual ? 1 : -1) * sigma[i] == 1;
    if (p.relation != Relation::kEqual) ++num_slack;
    if (!slack_basis) ++num_art;
  }
  sf.num_rows = rows;
  sf.num_cols = n + num_slack + num_art;
  sf.rows.resize(rows);
  sf.rhs.resize(rows);
  sf.row_sign.resize(rows);
  sf.original_row.resize(rows);
  sf.unit_col_of_row.resize(rows);
  sf.initial_basis.resize(rows);
  sf.cost = zero_vector(sf.num_cols);
  sf.free_col.assign(sf.num_cols, false);
  sf.artificial.assign(sf.num_cols, false);

  for (std::size_t j = 0; j < n; ++j) {
    const LpVariable& v = lp.variable(j);
    Rational c = v.cost * sf.vars[j].sign;
    sf.cost[j] = maximize ? Rational(-c) : c;
    sf.free_col[j] = !v.lower && !v.upper;
  }

  std::size_t next_slack = n;
  std::size_t next_art = n + num_slack;
  for (std::size_t i = 0; i < rows; ++i) {
    PendingRow& p = pending[i];
    LpTerms terms = std::move(p.terms);
    if (sigma[i] < 0) {
      for (auto& [j, a] : terms) a = -a;
    }
    std::size_t unit = kNone;
    if (p.relation != Relation::kEqual) {
      const std::size_t slack = next_slack++;
      const int coef = (p.relation == Relation::kLessEqual ? 1 : -1) * sigma[i];
      terms.emplace_back(slack, Rational(coef));
      if (coef == 1) unit = slack;
    }
    if (unit == kNone) {
      unit = next_art++;
      terms.emplace_back(unit, Rational(1));
      sf.artificial[unit] = true;
    }
    sf.unit_col_of_row[i] = unit;
    sf.initial_basis[i] = unit;
    sf.rows[i] = std::move(terms);
    sf.rhs[i] = sigma[i] < 0 ? Rational(-p.rhs) : p.rhs;
    sf.row_sign[i] = sigma[i];
    sf.original_row[i] = p.original;
  }
  return sf;
}

enum class PhaseResult { kOptimal, kUnbounded };

template <typename T>
class Tableau {
 public:
  using N = Num<T>;

  Tableau(const StandardForm& sf, std::size_t max_iterations)
      : rows_(sf.num_rows),
        cols_(sf.num_cols),
        width_(sf.num_cols + 1),
        a_(rows_ * width_, T(0)),
        basis_(sf.initial_basis),
        row_of_(cols_, kNone),
        free_(sf.free_col),
        enterable_(cols_, true),
        flipped_(cols_, false),
        d_(cols_, T(0)),
        obj_(0),
        max_iterations_(max_iterations) {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (const auto& [j, v] : sf.rows[i]) at(i, j) = N::from(v);
      at(i, cols_) = N::from(sf.rhs[i]);
      row_of_[basis_[i]] = i;
    }
    for (std::size_t j = 0; j < cols_; ++j)
      if (sf.artificial[j]) enterable_[j] = false;
  }

  void set_costs(std::vector<T> cost) {
    for (std::size_t j = 0; j < cols_; ++j)
      if (flipped_[j]) cost[j] = -cost[j];
    cost_ = std::move(cost);
    d_ = cost_;
    obj_ = T(0);
    for (std::size_t i = 0; i < rows_; ++i) {
      const T& cb = cost_[basis_[i]];
      if (N::exactly_zero(cb)) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!N::exactly_zero(at(i, j))) d_[j] -= cb * at(i, j);
      }
      obj_ += cb * at(i, cols_);
    }
    for (std::size_t j = 0; j < cols_; ++j) N::flush(d_[j]);
  }

  PhaseResult optimize() {
    std::size_t degenerate_run = 0;
    bool bland = false;
    for (;;) {
      if (iterations_ >= max_iterations_) {
        throw NumericalBreakdown("simplex iteration limit reached");
      }
      const std::size_t q = choose_entering(bland);
      if (q == kNone) return PhaseResult::kOptimal;
      if (free_[q] && N::pos(d_[q])) flip(q);
      const std::size_t r = choose_leaving(q, bland);
      if (r == kNone) return PhaseResult::kUnbounded;
      if (N::zero(at(r, cols_))) {
        if (++degenerate_run > kDegenerateLimit) bland = true;
      } else {
        degenerate_run = 0;
        bland = false;
      }
      pivot(r, q);
      ++iterations_;
    }
  }

  // After phase one: pivot basic artificials out wherever a structural or
  // slack column has a nonzero entry in their row. Rows with none are
  // redundant; their artificial stays basic at zero forever.
  void expel_artificials(const std::vector<bool>& artificial) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!artificial[basis_[i]]) continue;
      std::size_t best = kNone;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (artificial[j] || N::zero(at(i, j))) continue;
        if (best == kNone || N::abs(at(i, j)) > N::abs(at(i, best))) best = j;
        if constexpr (std::is_same_v<T, Rational>) break;
      }
      if (best != kNone) pivot(i, best);
    }
  }

  const T& objective() const { return obj_; }
  const T& reduced_cost(std::size_t j) const { return d_[j]; }
  std::size_t iterations() const { return iterations_; }

  T column_value(std::size_t j) const {
    if (row_of_[j] == kNone) return T(0);
    T v = at(row_of_[j], cols_);
    return flipped_[j] ? T(-v) : v;
  }

 private:
  static constexpr std::size_t kDegenerateLimit = 50;

  T& at(std::size_t i, std::size_t j) { return a_[i * width_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a_[i * width_ + j]; }

  bool candidate(std::size_t j) const {
    if (!enterable_[j] || row_of_[j] != kNone) return false;
    return N::neg(d_[j]) || (free_[j] && N::pos(d_[j]));
  }

  std::size_t choose_entering(bool bland) const {
    std::size_t best = kNone;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!candidate(j)) continue;
      if (bland) return j;
      if (best == kNone || N::abs(d_[j]) > N::abs(d_[best])) best = j;
    }
    return best;
  }

  std::size_t choose_leaving(std::size_t q, bool bland) const {
    std::size_t best = kNone;
    T best_ratio{};
    for (std::size_t i = 0; i < rows_; ++i) {
      if (free_[basis_[i]] || !N::pos(at(i, q))) continue;
      T rhs = at(i, cols_);
      if (N::neg(rhs)) rhs = T(0);
      T ratio = rhs / at(i, q);
      if (best == kNone || ratio < best_ratio) {
        best = i;
        best_ratio = std::move(ratio);
        continue;
      }
      if (ratio == best_ratio || (!std::is_same_v<T, Rational> && N::zero(ratio - best_ratio))) {
        const bool prefer = bland || std::is_same_v<T, Rational>
                                ? basis_[i] < basis_[best]
                                : N::abs(at(i, q)) > N::abs(at(best, q));
        if (prefer) best = i;
      }
    }
    return best;
  }

  void flip(std::size_t q) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, q) = -at(i, q);
    d_[q] = -d_[q];
    cost_[q] = -cost_[q];
    flipped_[q] = !flipped_[q];
  }

  void pivot(std::size_t r, std::size_t q) {
    const T inv = T(1) / at(r, q);
    nonzero_.clear();
    for (std::size_t j = 0; j < width_; ++j) {
      if (N::exactly_zero(at(r, j))) continue;
      at(r, j) *= inv;
      nonzero_.push_back(j);
    }
    at(r, q) = T(1);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || N::exactly_zero(at(i, q))) continue;
      const T f = at(i, q);
      for (std::size_t j : nonzero_) {
        at(i, j) -= f * at(r, j);
        N::flush(at(i, j));
      }
      at(i, q) = T(0);
    }
    if (!N::exactly_zero(d_[q])) {
      const T f = d_[q];
      for (std::size_t j : nonzero_) {
        if (j == cols_) {
          obj_ += f * at(r, j);
        } else {
          d_[j] -= f * at(r, j);
          N::flush(d_[j]);
        }
      }
      d_[q] = T(0);
    }
    row_of_[basis_[r]] = kNone;
    basis_[r] = q;
    row_of_[q] = r;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t width_;
  std::vector<T> a_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> row_of_;
  std::vector<bool> free_;
  std::vector<bool> enterable_;
  std::vector<bool> flipped_;
  std::vector<T> cost_;
  std::vector<T> d_;
  T obj_;
  std::size_t iterations_ = 0;
  std::size_t max_iterations_;
  std::vector<std::size_t> nonzero_;
};

template <typename T>
LpSolution run_simplex(const LinearProgram& lp, SolveMode mode) {
  using N = Num<T>;
  const StandardForm sf = standardize(lp);
  LpSolution sol;
  sol.mode = mode;
  if (sf.trivially_infeasible) {
    sol.status = LpStatus::kInfeasible;
    return sol;
  }
  const std::size_t max_iterations =
      std::is_same_v<T, Rational> ? 5'000'000 : 200 * (sf.num_rows + sf.num_cols) + 1000;
  Tableau<T> tab(sf, max_iterations);

  std::vector<T> phase1(sf.num_cols, T(0));
  bool any_artificial = false;
  for (std::size_t i = 0; i < sf.num_rows; ++i) {
    if (sf.artificial[sf.initial_basis[i]]) any_artificial = true;
  }
  for (std::size_t j = 0; j < sf.num_cols; ++j)
    if (sf.artificial[j]) phase1[j] = T(1);
  if (any_artificial) {
    tab.set_costs(phase1);
    tab.optimize();
    if (N::pos(tab.objective())) {
      sol.status = LpStatus::kInfeasible;
      sol.iterations = tab.iterations();
      return sol;
    }
    tab.expel_artificials(sf.artificial);
  }

  std::vector<T> phase2(sf.num_cols);
  for (std::size_t j = 0; j < sf.num_cols; ++j) phase2[j] = N::from(sf.cost[j]);
  tab.set_costs(std::move(phase2));
  const PhaseResult result = tab.optimize();
  sol.iterations = tab.iterations();
  if (result == PhaseResult::kUnbounded) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }

  sol.status = LpStatus::kOptimal;
  const std::size_t n = lp.num_variables();
  sol.primal.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& map = sf.vars[j];
    Rational value = N::exact(tab.column_value(map.col));
    sol.primal[j] = map.offset + (map.sign < 0 ? Rational(-value) : value);
  }
  sol.dual = zero_vector(lp.num_rows());
  const bool maximize = lp.sense() == Sense::kMaximize;
  for (std::size_t i = 0; i < sf.num_rows; ++i) {
    if (sf.original_row[i] == kNone) continue;
    Rational y = -N::exact(tab.reduced_cost(sf.unit_col_of_row[i]));
    if (sf.row_sign[i] < 0) y = -y;
    if (maximize) y = -y;
    sol.dual[sf.original_row[i]] = y;
  }
  sol.objective = lp.objective_value(sol.primal);
  return sol;
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, SolveMode mode) {
  if (mode == SolveMode::kExact) {
    LpSolution sol = run_simplex<Rational>(lp, mode);
    if (sol.status == LpStatus::kOptimal && !verify_solution(lp, sol)) {
      throw std::logic_error("exact simplex produced an unverifiable certificate");
    }
    return sol;
  }
  LpSolution sol = run_simplex<double>(lp, mode);
  if (sol.status == LpStatus::kOptimal && !verify_solution(lp, sol)) {
    throw NumericalBreakdown("float simplex result failed verification");
  }
  return sol;
}

bool verify_solution(const LinearProgram& lp, const LpSolution& sol, double tolerance) {
  if (sol.status != LpStatus::kOptimal) return false;
  const std::size_t n = lp.num_variables();
  if (sol.primal.size() != n || sol.dual.size() != lp.num_rows()) return false;
  const bool exact = sol.mode == SolveMode::kExact;
  const Rational tol = exact ? Rational(0) : Rational(tolerance);
  const auto within = [&](const Rational& slack, const Rational& scale) {
    // slack >= -tol * (1 + |scale|)
    return exact ? sgn(slack) >= 0 : slack >= -tol * (1 + abs(scale));
  };

  Rational scale = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const LpVariable& v = lp.variable(j);
    if (v.lower && !within(sol.primal[j] - *v.lower, *v.lower)) return false;
    if (v.upper && !within(*v.upper - sol.primal[j], *v.upper)) return false;
  }
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    const LpRow& row = lp.row(i);
    Rational lhs = 0;
    Rational mag = abs(row.rhs);
    for (const auto& [j, a] : row.terms) {
      lhs += a * sol.primal[j];
      mag += abs(a * sol.primal[j]);
    }
    const Rational diff = row.rhs - lhs;  // >= 0 for <=, <= 0 for >=
    if (row.relation != Relation::kGreaterEqual && !within(diff, mag)) return false;
    if (row.relation != Relation::kLessEqual && !within(-diff, mag)) return false;
  }

  // Dual signs, normalized to a minimization.
  const bool maximize = lp.sense() == Sense::kMaximize;
  RationalVector reduced(n);
  for (std::size_t j = 0; j < n; ++j) reduced[j] = lp.variable(j).cost;
  Rational dual_objective = 0;
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    const LpRow& row = lp.row(i);
    const Rational y = maximize ? Rational(-sol.dual[i]) : sol.dual[i];
    if (row.relation == Relation::kLessEqual && !within(-y, Rational(0))) return false;
    if (row.relation == Relation::kGreaterEqual && !within(y, Rational(0))) return false;
    for (const auto& [j, a] : row.terms) reduced[j] -= a * sol.dual[i];
    dual_objective += row.rhs * sol.dual[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    const LpVariable& v = lp.variable(j);
    const Rational d = maximize ? Rational(-reduced[j]) : reduced[j];
    const bool positive = exact ? sgn(d) > 0 : d > tol;
    const bool negative = exact ? sgn(d) < 0 : d < -tol;
    // Minimization: a positive reduced cost needs a finite lower bound.
    if (positive) {
      if (!v.lower) return false;
      dual_objective += *v.lower * reduced[j];
    } else if (negative) {
      if (!v.upper) return false;
      dual_objective += *v.upper * reduced[j];
    }
    scale += abs(reduced[j]);
  }
  const Rational primal_objective = lp.objective_value(sol.primal);
  if (exact) return primal_objective == dual_objective && primal_objective == sol.objective;
  const Rational gap = abs(primal_objective - dual_objective);
  return gap <= tol * (1 + abs(primal_objective) + scale) &&
         abs(primal_objective - sol.objective) <= tol * (1 + abs(primal_objective));
}

std::string dump_lp(const LinearProgram& lp) {
  std::ostringstream out;
  out << (lp.sense() == Sense::kMinimize ? "min" : "max");
  for (std::size_t j = 0; j < lp.num_variables(); ++j) {
    const Rational& c = lp.variable(j).cost;
    if (sgn(c) != 0) out << ' ' << (sgn(c) > 0 ? "+" : "") << c.get_str() << "*x" << j;
  }
  out << '\n';
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    const LpRow& row = lp.row(i);
    out << "r" << i << ':';
    for (const auto& [j, a] : row.terms) {
      out << ' ' << (sgn(a) >= 0 ? "+" : "") << a.get_str() << "*x" << j;
    }
    switch (row.relation) {
      case Relation::kLessEqual:
        out << " <= ";
        break;
      case Relation::kEqual:
        out << " = ";
        break;
      case Relation::kGreaterEqual:
        out << " >= ";
        break;
    }
    out << row.rhs.get_str() << '\n';
  }
  for (std::size_t j = 0; j < lp.num_variables(); ++j) {
    const LpVariable& v = lp.variable(j);
    out << "x" << j << " in [" << (v.lower ? v.lower->get_str() : "-inf") << ", "
        << (v.upper ? v.upper->get_str() : "+inf") << "]\n";
  }
  return out.str();
}

}  // namespace quadlin
