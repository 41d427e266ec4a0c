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

#ifndef QUADLIN_REPORT_H_
#define QUADLIN_REPORT_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "quadlin/bounds.h"
#include "quadlin/linearize.h"
#include "quadlin/rational.h"

namespace quadlin {

// Machine-readable reports. Everything under "payload" is a pure function
// of the inputs and flags; wall-clock data lives under "timing" only.

std::uint64_t fnv1a(std::string_view bytes);
std::string digest_string(std::string_view bytes);  // 16 hex digits

// "p/q" in exact mode, shortest round-tripping decimal in float mode.
std::string value_string(const Rational& v, SolveMode mode);

nlohmann::json vector_json(const RationalVector& v, SolveMode mode = SolveMode::kExact);

// Canonical text of a report's certificate; hashed into certificateDigest.
std::string certificate_text(const BoundReport& report);

nlohmann::json bound_json(const BoundReport& report);

nlohmann::json linearization_json(const LinearizationOutcome& outcome);

}  // namespace quadlin

#endif  // QUADLIN_REPORT_H_
