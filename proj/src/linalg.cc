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

#include "quadlin/linalg.h"

#include <algorithm>
#include <utility>

#include "quadlin/errors.h"

namespace quadlin {

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix sum: shape mismatch");
  }
  RationalMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix difference: shape mismatch");
  }
  RationalMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimension");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= s;
  return out;
}

RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector product");
  RationalVector out = zero_vector(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) != 0 && sgn(x[j]) != 0) out[i] += a(i, j) * x[j];
    }
  return out;
}

RationalMatrix diag_matrix(std::span<const Rational> d) {
  RationalMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RationalVector diagonal_of(const RationalMatrix& a) {
  const std::size_t n = std::min(a.rows(), a.cols());
  RationalVector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
  return d;
}

RationalMatrix symmetric_part(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("symmetric_part: not square");
  RationalMatrix s(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = (a(i, j) + a(j, i)) / 2;
  return s;
}

bool is_symmetric(const RationalMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

bool is_skew_symmetric(const RationalMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (a(i, j) + a(j, i) != 0) return false;
  return true;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Rational quadratic_form(const RationalMatrix& a, std::span<const Rational> x) {
  if (a.rows() != x.size() || a.cols() != x.size()) {
    throw DimensionMismatch("quadratic_form: shape mismatch");
  }
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (sgn(x[j]) != 0 && sgn(a(i, j)) != 0) row += a(i, j) * x[j];
    }
    s += x[i] * row;
  }
  return s;
}

RrefResult rref(RationalMatrix m) {
  RrefResult out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> nonzero;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    const Rational inv = 1 / m(r, c);
    nonzero.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (sgn(m(r, j)) != 0) {
        m(r, j) *= inv;
        nonzero.push_back(j);
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational factor = m(i, c);
      for (std::size_t j : nonzero) m(i, j) -= factor * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  // Row-by-row insertion keeps memory at rank x cols instead of copying m.
  RowSpace space(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = m.row(i);
    space.insert(RationalVector(row.begin(), row.end()));
  }
  return space.dimension();
}

std::vector<RationalVector> null_space_basis(const RationalMatrix& m) {
  const RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v = zero_vector(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      v[r.pivots[i]] = -r.reduced(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalVector solve_lower_triangular(const RationalMatrix& lower,
                                      std::span<const Rational> rhs) {
  const std::size_t n = lower.rows();
  if (lower.cols() != n || rhs.size() != n) {
    throw DimensionMismatch("solve_lower_triangular: shape mismatch");
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(lower(i, i)) == 0) {
      throw ZeroDiagonal("zero diagonal entry at row " + std::to_string(i));
    }
    Rational acc = rhs[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (sgn(lower(i, j)) != 0) acc -= lower(i, j) * x[j];
    }
    x[i] = acc / lower(i, i);
  }
  return x;
}

bool is_consistent(const RationalMatrix& a, std::span<const Rational> rhs) {
  if (a.rows() != rhs.size()) throw DimensionMismatch("is_consistent: shape mismatch");
  RationalMatrix augmented(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) augmented(i, j) = a(i, j);
    augmented(i, a.cols()) = rhs[i];
  }
  // Inconsistent exactly when some pivot lands in the rhs column.
  const RrefResult r = rref(std::move(augmented));
  return r.pivots.empty() || r.pivots.back() != a.cols();
}

void RowSpace::reduce(RationalVector& v) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t c = lead_[k];
    if (sgn(v[c]) == 0) continue;
    const Rational factor = v[c];
    const RationalVector& b = basis_[k];
    for (std::size_t j = c; j < width_; ++j) {
      if (sgn(b[j]) != 0) v[j] -= factor * b[j];
    }
  }
}

bool RowSpace::insert(RationalVector v) {
  if (v.size() != width_) throw DimensionMismatch("RowSpace::insert: width mismatch");
  reduce(v);
  std::size_t c = 0;
  while (c < width_ && sgn(v[c]) == 0) ++c;
  if (c == width_) return false;
  const Rational inv = 1 / v[c];
  for (std::size_t j = c; j < width_; ++j) {
    if (sgn(v[j]) != 0) v[j] *= inv;
  }
  // Keep earlier basis vectors free of the new leading column so that a
  // single forward sweep in reduce() stays correct.
  for (auto& b : basis_) {
    if (sgn(b[c]) == 0) continue;
    const Rational factor = b[c];
    for (std::size_t j = c; j < width_; ++j) {
      if (sgn(v[j]) != 0) b[j] -= factor * v[j];
    }
  }
  basis_.push_back(std::move(v));
  lead_.push_back(c);
  return true;
}

bool RowSpace::contains(RationalVector v) const {
  if (v.size() != width_) throw DimensionMismatch("RowSpace::contains: width mismatch");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

}  // namespace quadlin
