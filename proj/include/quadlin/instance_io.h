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

#ifndef QUADLIN_INSTANCE_IO_H_
#define QUADLIN_INSTANCE_IO_H_

#include <string>
#include <string_view>
#include <variant>

#include "quadlin/instance.h"

namespace quadlin {

// Line-oriented text formats; '#' starts a comment, blank lines are
// ignored, vertices and arcs are 1-based in the file.
//
//   qspp            bqp                  qap
//   n m             rows m               n
//   s t             <rows lines of B>    <n lines of A>
//   <m: tail head>  <b>                  <n lines of D>
//   nnz             nnz
//   <i j value>     <i j value>
//                   [linear <m values>]
//                   [integral]
//
// Values are integers, p/q, or decimals (converted exactly, but the
// instance is tagged as carrying float entries).
using Instance = std::variant<QsppInstance, BqpInstance, QapInstance>;

// Throws ParseError (with line number) or ValidationError.
Instance parse_instance(std::string_view text);
Instance read_instance_file(const std::string& path);

std::string serialize(const QsppInstance& inst);
std::string serialize(const BqpInstance& inst);
std::string serialize(const QapInstance& inst);
std::string serialize(const Instance& inst);

const char* format_name(const Instance& inst);
bool has_float_entries(const Instance& inst);

// BQP view of any instance (encodes QSPP and QAP).
BqpInstance to_bqp(const Instance& inst);

}  // namespace quadlin

#endif  // QUADLIN_INSTANCE_IO_H_
