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

#include "quadlin/report.h"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace quadlin {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest_string(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return buf;
}

std::string value_string(const Rational& v, SolveMode mode) {
  if (mode == SolveMode::kExact) return fraction_string(v);
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v.get_d());
  return std::string(buf, res.ptr);
}

nlohmann::json vector_json(const RationalVector& v, SolveMode mode) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& x : v) out.push_back(value_string(x, mode));
  return out;
}

namespace {

void put(std::ostringstream& out, const char* name, const RationalVector& v) {
  out << name << ':';
  for (const Rational& x : v) out << ' ' << x.get_str();
  out << '\n';
}

void put(std::ostringstream& out, const char* name, const RationalMatrix& m) {
  out << name << ' ' << m.rows() << 'x' << m.cols() << ':';
  for (const Rational& x : m.entries()) out << ' ' << x.get_str();
  out << '\n';
}

}  // namespace

std::string certificate_text(const BoundReport& report) {
  std::ostringstream out;
  out << to_string(report.method) << ' ' << to_string(report.mode) << ' ' << report.value.get_str()
      << '\n';
  put(out, "c", report.accumulated_c);
  for (const GlIterate& it : report.iterations) {
    put(out, "Ybar", it.y_bar);
    put(out, "zbar", it.z_bar);
  }
  put(out, "Y", report.y_matrix);
  put(out, "z", report.z);
  put(out, "alpha", report.alpha);
  put(out, "y", report.y);
  put(out, "x", report.x);
  put(out, "X", report.x_matrix);
  return out.str();
}

nlohmann::json bound_json(const BoundReport& report) {
  nlohmann::json j;
  j["method"] = to_string(report.method);
  j["label"] = report.label;
  j["mode"] = to_string(report.mode);
  j["value"] = value_string(report.value, report.mode);
  if (report.strategy) j["strategy"] = to_string(*report.strategy);
  j["sparsity"] = report.sparsity;
  if (report.lp_relaxation) j["note"] = "LP-relaxation bound";
  j["certificateDigest"] = digest_string(certificate_text(report));
  if (!report.iterations.empty()) {
    nlohmann::json trace = nlohmann::json::array();
    for (const GlIterate& it : report.iterations) trace.push_back(value_string(it.bound, report.mode));
    j["trace"] = trace;
  }
  return j;
}

nlohmann::json linearization_json(const LinearizationOutcome& outcome) {
  nlohmann::json j;
  j["linearizable"] = outcome.linearizable();
  if (outcome.linearization) {
    j["c"] = vector_json(outcome.linearization->entries);
    nlohmann::json nb = nlohmann::json::array();
    for (ArcId a : outcome.linearization->nonbasic) nb.push_back(a + 1);
    j["nonbasic_arcs"] = nb;
  }
  if (outcome.witness) {
    const NonLinearizabilityWitness& w = *outcome.witness;
    nlohmann::json wj;
    wj["arc"] = w.arc + 1;
    nlohmann::json arcs = nlohmann::json::array();
    for (ArcId a : w.tail_arcs) arcs.push_back(a + 1);
    wj["tail_arcs"] = arcs;
    wj["transformed"] = vector_json(w.transformed);
    wj["expected"] = vector_json(w.expected);
    j["witness"] = wj;
  }
  return j;
}

}  // namespace quadlin
