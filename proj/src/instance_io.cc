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

#include "quadlin/instance_io.h"

#include <fstream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "quadlin/errors.h"

namespace quadlin {
namespace {

struct Token {
  std::string text;
  std::size_t line;
};

class TokenStream {
 public:
  explicit TokenStream(std::string_view text) {
    std::size_t line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++line;
      std::string_view content = text.substr(pos, end - pos);
      if (auto hash = content.find('#'); hash != std::string_view::npos) content = content.substr(0, hash);
      std::istringstream in{std::string(content)};
      std::string word;
      while (in >> word) tokens_.push_back({word, line});
      pos = end + 1;
    }
    last_line_ = line;
  }

  bool done() const { return next_ >= tokens_.size(); }
  std::size_t line() const { return done() ? last_line_ : tokens_[next_].line; }
  const std::string* peek() const { return done() ? nullptr : &tokens_[next_].text; }

  const Token& take(const char* what) {
    if (done()) throw ParseError(last_line_, std::string("unexpected end of input, expected ") + what);
    return tokens_[next_++];
  }

  std::size_t count(const char* what) {
    const Token& t = take(what);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(t.text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.text.size() || v < 0) {
      throw ParseError(t.line, std::string("expected a nonnegative integer for ") + what + ", got '" + t.text + "'");
    }
    return static_cast<std::size_t>(v);
  }

  Rational value(const char* what, bool& float_entries) {
    const Token& t = take(what);
    try {
      Rational v = parse_rational(t.text);
      if (is_decimal_literal(t.text)) float_entries = true;
      return v;
    } catch (const Error&) {
      throw ParseError(t.line, std::string("bad number for ") + what + ": '" + t.text + "'");
    }
  }

  void keyword(const char* word) {
    const Token& t = take(word);
    if (t.text != word) throw ParseError(t.line, std::string("expected '") + word + "', got '" + t.text + "'");
  }

 private:
  std::vector<Token> tokens_;
  std::size_t next_ = 0;
  std::size_t last_line_ = 0;
};

// nnz followed by nnz (i, j, value) triplets into an m x m matrix.
RationalMatrix read_triplets(TokenStream& in, std::size_t m, bool& float_entries) {
  RationalMatrix q(m, m);
  const std::size_t nnz = in.count("nnz");
  std::map<std::pair<std::size_t, std::size_t>, bool> seen;
  for (std::size_t k = 0; k < nnz; ++k) {
    const std::size_t line = in.line();
    const std::size_t i = in.count("row index");
    const std::size_t j = in.count("column index");
    if (i < 1 || i > m || j < 1 || j > m) {
      throw ParseError(line, "cost entry (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range 1.." + std::to_string(m));
    }
    if (!seen.emplace(std::make_pair(i, j), true).second) {
      throw ParseError(line, "duplicate cost entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
    q(i - 1, j - 1) = in.value("cost value", float_entries);
  }
  return q;
}

void expect_end(TokenStream& in) {
  if (!in.done()) throw ParseError(in.line(), "trailing content '" + *in.peek() + "'");
}

QsppInstance parse_qspp(TokenStream& in) {
  const std::size_t n = in.count("vertex count");
  const std::size_t m = in.count("arc count");
  const std::size_t s = in.count("source");
  const std::size_t t = in.count("target");
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t line = in.line();
    const std::size_t u = in.count("arc tail");
    const std::size_t v = in.count("arc head");
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line, "arc endpoint out of range 1.." + std::to_string(n));
    arcs.push_back({u - 1, v - 1});
  }
  if (s < 1 || s > n || t < 1 || t > n) throw ValidationError("source/target out of range");
  bool float_entries = false;
  RationalMatrix q = read_triplets(in, m, float_entries);
  expect_end(in);
  try {
    QsppInstance inst{Dag(n, std::move(arcs), s - 1, t - 1), std::move(q), float_entries};
    inst.validate();
    return inst;
  } catch (const CycleDetected& e) {
    throw ValidationError(std::string("cycle: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw ValidationError(std::string("dimension mismatch: ") + e.what());
  }
}

BqpInstance parse_bqp(TokenStream& in) {
  const std::size_t rows = in.count("row count");
  const std::size_t m = in.count("variable count");
  BqpInstance inst;
  inst.constraints = RationalMatrix(rows, m);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j < m; ++j) inst.constraints(r, j) = in.value("constraint coefficient", inst.float_entries);
  inst.rhs.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) inst.rhs[r] = in.value("right-hand side", inst.float_entries);
  inst.cost = read_triplets(in, m, inst.float_entries);
  inst.linear = zero_vector(m);
  if (in.peek() && *in.peek() == "linear") {
    in.keyword("linear");
    for (std::size_t j = 0; j < m; ++j) inst.linear[j] = in.value("linear cost", inst.float_entries);
  }
  if (in.peek() && *in.peek() == "integral") {
    in.keyword("integral");
    inst.integral_polytope = true;
  }
  expect_end(in);
  try {
    inst.validate();
  } catch (const DimensionMismatch& e) {
    throw ValidationError(std::string("dimension mismatch: ") + e.what());
  }
  return inst;
}

QapInstance parse_qap(TokenStream& in) {
  const std::size_t n = in.count("size");
  QapInstance inst;
  inst.flow = RationalMatrix(n, n);
  inst.distance = RationalMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inst.flow(i, j) = in.value("flow entry", inst.float_entries);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inst.distance(i, j) = in.value("distance entry", inst.float_entries);
  expect_end(in);
  return inst;
}

void write_triplets(std::ostringstream& out, const RationalMatrix& q) {
  std::size_t nnz = 0;
  for (const Rational& v : q.entries())
    if (sgn(v) != 0) ++nnz;
  out << nnz << '\n';
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j)
      if (sgn(q(i, j)) != 0) out << i + 1 << ' ' << j + 1 << ' ' << compact_string(q(i, j)) << '\n';
}

void write_row(std::ostringstream& out, std::span<const Rational> row) {
  for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << compact_string(row[j]);
  out << '\n';
}

}  // namespace

Instance parse_instance(std::string_view text) {
  TokenStream in(text);
  const Token& tag = in.take("format tag");
  if (tag.text == "qspp") return parse_qspp(in);
  if (tag.text == "bqp") return parse_bqp(in);
  if (tag.text == "qap") return parse_qap(in);
  throw ParseError(tag.line, "unknown format tag '" + tag.text + "' (expected qspp, bqp or qap)");
}

Instance read_instance_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_instance(buffer.str());
}

std::string serialize(const QsppInstance& inst) {
  const Dag& g = inst.graph;
  std::ostringstream out;
  out << "qspp\n" << g.num_vertices() << ' ' << g.num_arcs() << '\n';
  out << g.source() + 1 << ' ' << g.target() + 1 << '\n';
  for (const Arc& a : g.arcs()) out << a.tail + 1 << ' ' << a.head + 1 << '\n';
  write_triplets(out, inst.cost);
  return out.str();
}

std::string serialize(const BqpInstance& inst) {
  std::ostringstream out;
  out << "bqp\n" << inst.num_rows() << ' ' << inst.num_vars() << '\n';
  for (std::size_t r = 0; r < inst.num_rows(); ++r) write_row(out, inst.constraints.row(r));
  write_row(out, inst.rhs);
  write_triplets(out, inst.cost);
  bool any_linear = false;
  for (const Rational& v : inst.linear)
    if (sgn(v) != 0) any_linear = true;
  if (any_linear) {
    out << "linear\n";
    write_row(out, inst.linear);
  }
  if (inst.integral_polytope) out << "integral\n";
  return out.str();
}

std::string serialize(const QapInstance& inst) {
  std::ostringstream out;
  out << "qap\n" << inst.flow.rows() << '\n';
  for (std::size_t i = 0; i < inst.flow.rows(); ++i) write_row(out, inst.flow.row(i));
  for (std::size_t i = 0; i < inst.distance.rows(); ++i) write_row(out, inst.distance.row(i));
  return out.str();
}

std::string serialize(const Instance& inst) {
  return std::visit([](const auto& v) { return serialize(v); }, inst);
}

const char* format_name(const Instance& inst) {
  switch (inst.index()) {
    case 0:
      return "qspp";
    case 1:
      return "bqp";
    default:
      return "qap";
  }
}

bool has_float_entries(const Instance& inst) {
  return std::visit([](const auto& v) { return v.float_entries; }, inst);
}

BqpInstance to_bqp(const Instance& inst) {
  if (const auto* q = std::get_if<QsppInstance>(&inst)) return qspp_to_bqp(*q);
  if (const auto* a = std::get_if<QapInstance>(&inst)) return qap_to_bqp(*a);
  return std::get<BqpInstance>(inst);
}

}  // namespace quadlin
