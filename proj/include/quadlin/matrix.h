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

#ifndef QUADLIN_MATRIX_H_
#define QUADLIN_MATRIX_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "quadlin/errors.h"
#include "quadlin/rational.h"

namespace quadlin {

// Dense row-major matrix. Sizes at the scale this library targets (a few
// hundred rows/columns) fit comfortably, so no sparse storage is offered.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, T(0)) {}
  DenseMatrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }

  const std::vector<T>& entries() const { return entries_; }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw DimensionMismatch("append_row: width mismatch");
    entries_.insert(entries_.end(), values.begin(), values.end());
    ++rows_;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using RationalMatrix = DenseMatrix<Rational>;

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x);

RationalMatrix diag_matrix(std::span<const Rational> d);
RationalVector diagonal_of(const RationalMatrix& a);
// (A + A^T) / 2.
RationalMatrix symmetric_part(const RationalMatrix& a);
bool is_symmetric(const RationalMatrix& a);
bool is_skew_symmetric(const RationalMatrix& a);
// Kronecker product; index (i*rows(b)+k, j*cols(b)+l) holds a(i,j)*b(k,l).
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
// x^T A x.
Rational quadratic_form(const RationalMatrix& a, std::span<const Rational> x);

}  // namespace quadlin

#endif  // QUADLIN_MATRIX_H_
