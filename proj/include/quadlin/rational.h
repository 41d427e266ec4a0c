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

#ifndef QUADLIN_RATIONAL_H_
#define QUADLIN_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace quadlin {

// Arbitrary-precision rational. GMP keeps every mpq_class in canonical form
// (positive denominator, reduced, zero stored as 0/1) after each operation.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Parses "p", "-p", "p/q" or a decimal such as "1.25" / "-3e-2". Decimals
// are converted exactly (1.25 -> 5/4). Throws quadlin::Error on bad input.
Rational parse_rational(std::string_view text);

// True when `text` uses decimal/scientific notation rather than p or p/q.
bool is_decimal_literal(std::string_view text);

// Always "num/den", e.g. "38/1". Used by reports in exact mode.
std::string fraction_string(const Rational& q);

// "num" when the value is an integer, "num/den" otherwise.
std::string compact_string(const Rational& q);

inline Rational from_double(double v) { return Rational(v); }
inline double to_double(const Rational& q) { return q.get_d(); }

RationalVector zero_vector(std::size_t n);

}  // namespace quadlin

#endif  // QUADLIN_RATIONAL_H_
