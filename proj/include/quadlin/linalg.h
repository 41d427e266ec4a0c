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

#ifndef QUADLIN_LINALG_H_
#define QUADLIN_LINALG_H_

#include <cstddef>
#include <span>
#include <vector>

#include "quadlin/matrix.h"
#include "quadlin/rational.h"

namespace quadlin {

struct RrefResult {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of row i, increasing

  std::size_t rank() const { return pivots.size(); }
};

// Reduced row echelon form over the rationals. The pivot in each column is
// the first nonzero entry at or below the current row; exact arithmetic
// makes magnitude pivoting unnecessary.
RrefResult rref(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

// Basis of {v : Mv = 0}, one vector per free column of rref(M). Each basis
// vector has a 1 in its free column and zeros in the other free columns.
std::vector<RationalVector> null_space_basis(const RationalMatrix& m);

// Forward substitution. Throws ZeroDiagonal when some L(i,i) == 0.
RationalVector solve_lower_triangular(const RationalMatrix& lower,
                                      std::span<const Rational> rhs);

// True when the system Ax = rhs has a solution (rank test on [A | rhs]).
bool is_consistent(const RationalMatrix& a, std::span<const Rational> rhs);

// Incremental row-space tracker: keeps an echelon basis and answers
// membership queries without redoing a full elimination each time.
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t dimension() const { return basis_.size(); }

  // Reduces `v` against the basis; returns true (and stores the reduced
  // vector) when it was independent.
  bool insert(RationalVector v);
  bool contains(RationalVector v) const;

 private:
  void reduce(RationalVector& v) const;

  std::size_t width_;
  std::vector<RationalVector> basis_;  // basis_[k] has leading 1 at lead_[k]
  std::vector<std::size_t> lead_;
};

}  // namespace quadlin

#endif  // QUADLIN_LINALG_H_
