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

#ifndef QUADLIN_ERRORS_H_
#define QUADLIN_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quadlin {

// Root of every error the library raises. Callers that only need a
// diagnostic can catch this; the CLI maps the concrete types to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDiagonal : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class CycleDetected : public Error {
 public:
  using Error::Error;
};

class Unreachable : public Error {
 public:
  using Error::Error;
};

// Raised by the path enumerator when the s-t path count exceeds the cap.
class PathExplosion : public Error {
 public:
  using Error::Error;
};

// Raised by the feasible-set enumerators (permutations, binary vectors).
class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

class NotSkewSymmetric : public Error {
 public:
  using Error::Error;
};

// A precondition of the DAG linearization algorithm does not hold.
class AssumptionViolated : public Error {
 public:
  using Error::Error;
};

// Float-mode simplex could not certify its answer; retry in exact mode.
class NumericalBreakdown : public Error {
 public:
  using Error::Error;
};

// An LP inside a bound computation was infeasible or unbounded.
class LpFailure : public Error {
 public:
  using Error::Error;
};

class ChainViolation : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace quadlin

#endif  // QUADLIN_ERRORS_H_
