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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "quadlin/bounds.h"
#include "quadlin/errors.h"
#include "quadlin/instance_io.h"
#include "quadlin/linearize.h"
#include "quadlin/oracle.h"
#include "quadlin/report.h"

namespace quadlin::cli {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  bool json = false;
  std::string mode;
  std::string method;
  std::string strategy = "sym";
  bool sparsity = false;
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t max_iterations = 50;
  std::size_t n = 0;
};

// Above this many variables the exact simplex is too slow to be a default.
constexpr std::size_t kExactDefaultLimit = 40;

SolveMode resolve_mode(const std::string& flag, std::size_t m) {
  std::string text = flag;
  if (text.empty()) {
    if (const char* env = std::getenv("QUADLIN_MODE"); env != nullptr && *env != '\0') text = env;
  }
  if (text.empty()) return m > kExactDefaultLimit ? SolveMode::kFloat : SolveMode::kExact;
  if (text == "exact") return SolveMode::kExact;
  if (text == "float") return SolveMode::kFloat;
  throw UsageError("mode must be exact or float, got '" + text + "'");
}

SkewStrategy parse_strategy(const std::string& s) {
  if (s == "upper") return SkewStrategy::kUpperTriangular;
  if (s == "sym") return SkewStrategy::kSymmetrize;
  if (s == "none") return SkewStrategy::kNone;
  throw UsageError("strategy must be upper, sym or none, got '" + s + "'");
}

std::string show(const Rational& v, SolveMode mode) {
  return mode == SolveMode::kExact ? compact_string(v) : value_string(v, mode);
}

json envelope(const Instance& inst, const std::string& command) {
  json j;
  j["instance"] = {{"format", format_name(inst)}, {"digest", digest_string(serialize(inst))}};
  j["payload"] = {{"command", command}};
  return j;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

LinearizableFamily lbb_family(const Instance& inst, const BqpInstance& bqp, std::size_t cap) {
  if (const auto* q = std::get_if<QsppInstance>(&inst)) return spanning_set(q->graph).as_family();
  return enumerated_spanning_set(bqp, cap);
}

BoundReport compute_bound(const std::string& method, const Instance& inst, const BqpInstance& bqp,
                          const Options& opt, SolveMode mode, const PairSet* pairs,
                          std::optional<LinearizableFamily>& family) {
  if (method == "gl") return gl_bound(bqp, mode);
  if (method == "ggl") return ggl_bound(bqp, parse_strategy(opt.strategy), opt.max_iterations, mode);
  if (method == "lbbp") return lbb_prime(bqp, pairs, mode);
  if (method == "rlt1") return rlt1(bqp, pairs, mode);
  if (method == "lbbstar") {
    family = lbb_family(inst, bqp, opt.cap);
    return lbb_star(bqp, *family, pairs, mode);
  }
  throw UsageError("unknown method '" + method + "'");
}

std::optional<OptResult> try_opt(const Instance& inst, const BqpInstance& bqp, std::size_t cap) {
  try {
    if (const auto* q = std::get_if<QsppInstance>(&inst)) return brute_force_opt(*q, cap);
    return brute_force_opt(bqp, cap);
  } catch (const PathExplosion&) {
  } catch (const EnumerationTooLarge&) {
  }
  return std::nullopt;
}

int cmd_generate(const Options& opt, std::ostream& out) {
  out << serialize(generate_tournament(opt.n));
  return kOk;
}

int cmd_linearize(const Options& opt, std::ostream& out) {
  const Instance inst = read_instance_file(opt.file);
  const auto* q = std::get_if<QsppInstance>(&inst);
  if (q == nullptr) throw UsageError("linearize needs a qspp instance");
  const auto start = Clock::now();
  const LinearizationOutcome outcome = linearize_qspp(*q);
  if (opt.json) {
    json j = envelope(inst, "linearize");
    j["payload"]["linearization"] = linearization_json(outcome);
    j["timing"] = {{"seconds", seconds_since(start)}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  if (outcome.linearization) {
    out << "linearizable\nc =";
    for (const Rational& v : outcome.linearization->entries) out << ' ' << compact_string(v);
    out << '\n';
  } else {
    const NonLinearizabilityWitness& w = *outcome.witness;
    out << "not linearizable\nwitness arc " << w.arc + 1 << ": transformed";
    for (const Rational& v : w.transformed) out << ' ' << compact_string(v);
    out << " vs expected";
    for (const Rational& v : w.expected) out << ' ' << compact_string(v);
    out << '\n';
  }
  return kOk;
}

int cmd_spanning_set(const Options& opt, std::ostream& out) {
  const Instance inst = read_instance_file(opt.file);
  const auto start = Clock::now();
  const LinearizableFamily family = lbb_family(inst, to_bqp(inst), opt.cap);
  json members = json::array();
  for (std::size_t t = 0; t < family.size(); ++t) {
    json entries = json::array();
    const RationalMatrix& q = family.matrix(t);
    for (std::size_t i = 0; i < q.rows(); ++i)
      for (std::size_t j = 0; j < q.cols(); ++j)
        if (sgn(q(i, j)) != 0) entries.push_back({i + 1, j + 1, fraction_string(q(i, j))});
    members.push_back({{"Q", entries}, {"c", vector_json(family.vector(t))}});
  }
  if (opt.json) {
    json j = envelope(inst, "spanning-set");
    j["payload"]["dimension"] = family.size();
    j["payload"]["members"] = members;
    j["timing"] = {{"seconds", seconds_since(start)}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "dimension " << family.size() << '\n';
  for (std::size_t t = 0; t < family.size(); ++t) {
    out << "Q" << t + 1 << ':';
    for (const auto& e : members[t]["Q"]) {
      out << " (" << e[0].get<std::size_t>() << ',' << e[1].get<std::size_t>() << ")="
          << compact_string(parse_rational(e[2].get<std::string>()));
    }
    out << "  c:";
    for (const Rational& v : family.vector(t)) out << ' ' << compact_string(v);
    out << '\n';
  }
  return kOk;
}

int cmd_bound(const Options& opt, std::ostream& out) {
  const Instance inst = read_instance_file(opt.file);
  const BqpInstance bqp = to_bqp(inst);
  const SolveMode mode = resolve_mode(opt.mode, bqp.num_vars());
  const PairSet pairs = opt.sparsity ? sparsity_pairs(bqp) : PairSet{};
  const auto start = Clock::now();
  std::optional<LinearizableFamily> family;
  const BoundReport report =
      compute_bound(opt.method, inst, bqp, opt, mode, opt.sparsity ? &pairs : nullptr, family);
  const double elapsed = seconds_since(start);
  const bool certified = verify_certificate(bqp, report, family ? &*family : nullptr);
  if (opt.json) {
    json j = envelope(inst, "bound");
    j["payload"]["bound"] = bound_json(report);
    j["payload"]["certificateVerified"] = certified;
    j["timing"] = {{"seconds", elapsed}};
    out << j.dump(2) << '\n';
  } else {
    out << report.label << " = " << show(report.value, mode)
        << (report.lp_relaxation ? "  (LP-relaxation bound)" : "") << '\n';
  }
  if (!certified) throw ChainViolation("certificate of " + report.label + " failed re-verification");
  return kOk;
}

int cmd_opt(const Options& opt, std::ostream& out) {
  const Instance inst = read_instance_file(opt.file);
  const auto start = Clock::now();
  const OptResult result = std::holds_alternative<QsppInstance>(inst)
                               ? brute_force_opt(std::get<QsppInstance>(inst), opt.cap)
                               : brute_force_opt(to_bqp(inst), opt.cap);
  if (opt.json) {
    json j = envelope(inst, "opt");
    j["payload"]["opt"] = fraction_string(result.value);
    j["payload"]["points"] = result.points;
    j["payload"]["minimizer"] = vector_json(result.minimizer);
    j["timing"] = {{"seconds", seconds_since(start)}};
    out << j.dump(2) << '\n';
  } else {
    out << compact_string(result.value) << '\n';
  }
  return kOk;
}

int cmd_verify_chain(const Options& opt, std::ostream& out) {
  const Instance inst = read_instance_file(opt.file);
  const BqpInstance bqp = to_bqp(inst);
  const SolveMode mode = resolve_mode(opt.mode, bqp.num_vars());
  const PairSet pairs = opt.sparsity ? sparsity_pairs(bqp) : PairSet{};
  const PairSet* g = opt.sparsity ? &pairs : nullptr;

  std::vector<BoundReport> reports;
  std::vector<double> runtimes;
  std::optional<LinearizableFamily> family;
  const auto timed = [&](auto&& fn) {
    const auto start = Clock::now();
    reports.push_back(fn());
    runtimes.push_back(seconds_since(start));
  };
  timed([&] { return gl_bound(bqp, mode); });
  timed([&] { return ggl_bound(bqp, SkewStrategy::kUpperTriangular, opt.max_iterations, mode); });
  timed([&] { return ggl_bound(bqp, SkewStrategy::kSymmetrize, opt.max_iterations, mode); });
  timed([&] { return lbb_prime(bqp, g, mode); });
  timed([&] { return rlt1(bqp, g, mode); });
  timed([&] {
    family = lbb_family(inst, bqp, opt.cap);
    return lbb_star(bqp, *family, g, mode);
  });
  const std::optional<OptResult> best = try_opt(inst, bqp, opt.cap);

  for (const BoundReport& r : reports) {
    const LinearizableFamily* fam = r.method == BoundMethod::kLbbStar ? &*family : nullptr;
    if (!verify_certificate(bqp, r, fam)) {
      throw ChainViolation("certificate of " + r.label + " failed re-verification");
    }
  }
  const std::optional<Rational> opt_value =
      best ? std::optional<Rational>(best->value) : std::nullopt;
  const ChainResult chain = verify_chain(reports, opt_value);

  if (opt.json) {
    json j = envelope(inst, "verify-chain");
    json methods = json::array();
    json timing = json::array();
    for (std::size_t k = 0; k < reports.size(); ++k) {
      methods.push_back(bound_json(reports[k]));
      timing.push_back({{"method", to_string(reports[k].method)}, {"seconds", runtimes[k]}});
    }
    j["payload"]["methods"] = methods;
    if (best) j["payload"]["opt"] = fraction_string(best->value);
    j["payload"]["checks"] = chain.checks;
    j["payload"]["chain"] = "OK";
    j["timing"] = timing;
    out << j.dump(2) << '\n';
    return kOk;
  }
  for (const BoundReport& r : reports) {
    out << r.label;
    if (r.strategy) out << '[' << to_string(*r.strategy) << ']';
    out << " = " << show(r.value, mode) << '\n';
  }
  if (best) {
    out << "OPT = " << compact_string(best->value) << '\n';
  } else {
    out << "OPT = (not enumerable within cap)\n";
  }
  out << "chain OK\n";
  return kOk;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const UsageError*>(&e)) return kUsage;
  if (dynamic_cast<const ParseError*>(&e)) return kParse;
  if (dynamic_cast<const ValidationError*>(&e) || dynamic_cast<const CycleDetected*>(&e) ||
      dynamic_cast<const DimensionMismatch*>(&e) || dynamic_cast<const AssumptionViolated*>(&e) ||
      dynamic_cast<const NotSkewSymmetric*>(&e) || dynamic_cast<const Unreachable*>(&e) ||
      dynamic_cast<const ZeroDiagonal*>(&e)) {
    return kValidation;
  }
  if (dynamic_cast<const PathExplosion*>(&e) || dynamic_cast<const EnumerationTooLarge*>(&e)) {
    return kEnumeration;
  }
  if (dynamic_cast<const LpFailure*>(&e) || dynamic_cast<const NumericalBreakdown*>(&e)) {
    return kLpFailure;
  }
  if (dynamic_cast<const ChainViolation*>(&e)) return kChainViolation;
  return kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linearization and lower bounds for binary quadratic programs"};
  app.require_subcommand(1);
  Options opt;

  auto* generate = app.add_subcommand("generate", "Emit a generated instance");
  auto* tournament = generate->add_subcommand("tournament", "Complete DAG with equal-length arc costs");
  tournament->add_option("--n", opt.n, "Number of vertices")->required()->check(CLI::Range(2, 64));
  generate->require_subcommand(1);

  auto* linearize = app.add_subcommand("linearize", "Decide linearizability of a qspp instance");
  auto* span = app.add_subcommand("spanning-set", "Basis of the linearizable matrices");
  auto* bound = app.add_subcommand("bound", "Compute one lower bound");
  auto* optimum = app.add_subcommand("opt", "Exact optimum by enumeration");
  auto* chain = app.add_subcommand("verify-chain", "Run every bound and check their ordering");

  for (CLI::App* sub : {linearize, span, bound, optimum, chain}) {
    sub->add_option("FILE", opt.file, "Instance file")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", opt.json, "Emit a JSON report");
  }
  for (CLI::App* sub : {span, bound, optimum, chain}) {
    sub->add_option("--cap", opt.cap, "Enumeration cap");
  }
  for (CLI::App* sub : {bound, chain}) {
    sub->add_option("--mode", opt.mode, "exact or float (default: QUADLIN_MODE, else by size)")
        ->check(CLI::IsMember({"exact", "float"}));
    sub->add_flag("--sparsity", opt.sparsity, "Use the structural sparsity pairs");
    sub->add_option("--max-iter", opt.max_iterations, "GGL iteration cap")->check(CLI::PositiveNumber);
  }
  bound->add_option("--method", opt.method, "gl | ggl | lbbp | rlt1 | lbbstar")
      ->required()
      ->check(CLI::IsMember({"gl", "ggl", "lbbp", "rlt1", "lbbstar"}));
  bound->add_option("--strategy", opt.strategy, "GGL skew strategy: upper | sym | none")
      ->check(CLI::IsMember({"upper", "sym", "none"}));

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (tournament->parsed()) return cmd_generate(opt, out);
    if (linearize->parsed()) return cmd_linearize(opt, out);
    if (span->parsed()) return cmd_spanning_set(opt, out);
    if (bound->parsed()) return cmd_bound(opt, out);
    if (optimum->parsed()) return cmd_opt(opt, out);
    if (chain->parsed()) return cmd_verify_chain(opt, out);
  } catch (const std::exception& e) {
    const int code = exit_code_for(e);
    err << "error: " << e.what() << '\n';
    return code;
  }
  return kUsage;
}

}  // namespace quadlin::cli
