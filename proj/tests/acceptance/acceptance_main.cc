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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit status
// when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "quadlin/bounds.h"
#include "quadlin/instance.h"
#include "quadlin/instance_io.h"
#include "quadlin/linearize.h"
#include "quadlin/lp.h"
#include "quadlin/oracle.h"
#include "support/generators.h"
#include "support/lp_oracle.h"

namespace quadlin {
namespace {

using testing::Rng;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. generate + opt through the command-line front end: 38, 45, 50 exactly,
// under 60 s each.
Outcome tournament_optima() {
  Outcome o;
  const std::pair<int, std::string> expected[] = {{13, "38"}, {14, "45"}, {15, "50"}};
  std::ostringstream detail;
  for (const auto& [n, value] : expected) {
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream gen, err;
    if (cli::run({"quadlin", "generate", "tournament", "--n", std::to_string(n)}, gen, err) != 0) {
      fail(o, "generate failed: " + err.str());
      continue;
    }
    const std::string path = "acceptance_tournament_" + std::to_string(n) + ".qspp";
    if (FILE* f = std::fopen(path.c_str(), "w")) {
      std::fputs(gen.str().c_str(), f);
      std::fclose(f);
    }
    std::ostringstream out;
    const int code = cli::run({"quadlin", "opt", path}, out, err);
    const double t = seconds_since(start);
    std::remove(path.c_str());
    detail << "n=" << n << ":" << out.str().substr(0, out.str().size() - 1) << " (" << t << "s) ";
    if (code != 0 || out.str() != value + "\n") fail(o, "n=" + std::to_string(n) + " gave " + out.str());
    if (t >= 60) fail(o, "n=" + std::to_string(n) + " too slow");
  }
  if (o.pass) o.detail = detail.str();
  return o;
}

// 2. Q = make_linearizable(Y, z) on random DAGs: linearizable, and the
// returned c matches x^T Q x on every path.
Outcome linearization_round_trip() {
  Outcome o;
  Rng rng(1001);
  int cases = 0;
  for (int trial = 0; trial < 220; ++trial) {
    const Dag g = testing::random_corridor_dag(rng, 3 + trial % 8, 20);
    const BqpInstance b = qspp_to_bqp(QsppInstance{g, RationalMatrix(g.num_arcs(), g.num_arcs()), false});
    const auto [q, c] = make_linearizable(b, testing::random_matrix(rng, b.num_rows(), b.num_vars(), -5, 5, 3),
                                          testing::random_vector(rng, b.num_vars(), -5, 5, 2), trial % 2 == 0);
    const QsppInstance inst{g, q, false};
    const LinearizationOutcome out = linearize_qspp(inst);
    ++cases;
    if (!out.linearizable()) {
      fail(o, "rejected a constructed instance, trial " + std::to_string(trial));
    } else if (!is_linearization(inst, q, out.linearization->entries)) {
      fail(o, "wrong vector, trial " + std::to_string(trial));
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " instances";
  return o;
}

// 3. One extra off-diagonal entry on a linearizable Q: every rejection must
// be confirmed by the all-paths linear system.
Outcome non_linearizability_soundness() {
  Outcome o;
  Rng rng(1002);
  int rejected = 0;
  int cases = 0;
  for (int trial = 0; trial < 240; ++trial) {
    Dag g = testing::double_diamond();
    if (trial % 2 == 1) {
      do {
        g = testing::random_corridor_dag(rng, 4 + trial % 6, 16);
      } while (count_st_paths(g) <= classify_arcs(g).basic.size());
    }
    const std::size_t m = g.num_arcs();
    const BqpInstance b = qspp_to_bqp(QsppInstance{g, RationalMatrix(m, m), false});
    auto [q, c] = make_linearizable(b, testing::random_matrix(rng, b.num_rows(), m, -4, 4),
                                    testing::random_vector(rng, m, -4, 4), false);
    const std::size_t i = testing::uniform_int(rng, 0, static_cast<int>(m) - 1);
    std::size_t j = testing::uniform_int(rng, 0, static_cast<int>(m) - 2);
    if (j >= i) ++j;
    q(i, j) += testing::random_rational(rng, 1, 6, 2);
    const QsppInstance inst{g, q, false};
    ++cases;
    const bool verdict = linearize_qspp(inst).linearizable();
    if (verdict != path_system_consistent(inst)) fail(o, "disagreement, trial " + std::to_string(trial));
    if (!verdict) ++rejected;
  }
  RationalMatrix hand(8, 8);
  hand(0, 6) = hand(6, 0) = 1;
  const LinearizationOutcome w = linearize_qspp(QsppInstance{testing::double_diamond(), hand, false});
  if (w.linearizable() || !w.witness || w.witness->transformed == w.witness->expected)
    fail(o, "double-diamond witness instance accepted");
  if (o.pass) o.detail = std::to_string(cases) + " perturbations, " + std::to_string(rejected) + " rejected";
  return o;
}

// 4. Span membership agrees with the algorithm; every basis member is
// linearizable by enumeration.
Outcome spanning_set_equivalence() {
  Outcome o;
  Rng rng(1003);
  int cases = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Dag g = testing::random_corridor_dag(rng, 3 + trial % 7, 16);
    const std::size_t m = g.num_arcs();
    const SpanningSet basis = spanning_set(g);
    const QsppInstance zero{g, RationalMatrix(m, m), false};
    for (std::size_t k = 0; k < basis.dimension(); ++k) {
      if (!is_linearization(zero, basis.matrices[k], basis.vectors[k])) fail(o, "basis member not linearizable");
    }
    const BqpInstance b = qspp_to_bqp(zero);
    for (int probe = 0; probe < 4; ++probe) {
      RationalMatrix q = probe % 2 == 0
                             ? make_linearizable(b, testing::random_matrix(rng, b.num_rows(), m, -3, 3),
                                                 zero_vector(m), probe == 2).first
                             : testing::random_matrix(rng, m, m, -3, 3, 1);
      if (probe == 3) {
        q = make_linearizable(b, testing::random_matrix(rng, b.num_rows(), m, -3, 3), zero_vector(m), false).first;
        q(0, m - 1) += 1;
      }
      for (std::size_t i = 0; i < m; ++i) q(i, i) = 0;
      ++cases;
      if (in_span(basis, q) != linearize_qspp(QsppInstance{g, q, false}).linearizable())
        fail(o, "membership disagrees, trial " + std::to_string(trial));
    }
  }
  if (o.pass) o.detail = "60 graphs, " + std::to_string(cases) + " probes";
  return o;
}

// 5. The full chain in exact mode against the enumerated optimum.
Outcome bound_chain() {
  Outcome o;
  Rng rng(1004);
  int qspp_cases = 0;
  int qap_cases = 0;
  for (int trial = 0; trial < 110; ++trial) {
    BqpInstance b;
    LinearizableFamily family;
    if (trial % 5 == 4) {
      b = qap_to_bqp(testing::random_qap(rng, trial % 15 == 14 ? 4 : 3, -3, 6));
      family = enumerated_spanning_set(b);
      ++qap_cases;
    } else {
      const QsppInstance q = testing::random_qspp(rng, 4 + trial % 6, 16, -4, 8);
      b = qspp_to_bqp(q);
      family = spanning_set(q.graph).as_family();
      ++qspp_cases;
    }
    const Rational opt = brute_force_opt(b).value;
    std::vector<BoundReport> reports{gl_bound(b),
                                     ggl_bound(b, SkewStrategy::kUpperTriangular),
                                     ggl_bound(b, SkewStrategy::kSymmetrize),
                                     lbb_prime(b),
                                     rlt1(b),
                                     lbb_star(b, family)};
    try {
      verify_chain(reports, opt);
    } catch (const std::exception& e) {
      fail(o, std::string("trial ") + std::to_string(trial) + ": " + e.what());
    }
    if (reports[3].value != reports[4].value) fail(o, "LBB' != RLT1, trial " + std::to_string(trial));
    for (const BoundReport& r : reports) {
      if (!verify_certificate(b, r, r.method == BoundMethod::kLbbStar ? &family : nullptr))
        fail(o, std::string("certificate rejected: ") + r.label);
    }
  }
  if (o.pass) o.detail = std::to_string(qspp_cases) + " qspp + " + std::to_string(qap_cases) + " qap";
  return o;
}

// 6. lbb_prime is unchanged by Q + S + Diag(d), l - d.
Outcome reformulation_invariance() {
  Outcome o;
  Rng rng(1005);
  for (int inst = 0; inst < 10; ++inst) {
    const BqpInstance b = inst % 5 == 4 ? qap_to_bqp(testing::random_qap(rng, 3, -3, 5))
                                        : qspp_to_bqp(testing::random_qspp(rng, 4 + inst % 4, 10, -4, 6));
    const Rational base = lbb_prime(b).value;
    const std::size_t m = b.num_vars();
    for (int pair = 0; pair < 50; ++pair) {
      const BqpInstance r = reformulate(b, testing::random_skew(rng, m, -6, 6, 3), testing::random_vector(rng, m, -6, 6, 2));
      if (lbb_prime(r).value != base) fail(o, "instance " + std::to_string(inst) + " changed");
    }
  }
  if (o.pass) o.detail = "10 instances x 50 (S, d)";
  return o;
}

// 7. Simplex against vertex enumeration: exact with zero tolerance, float
// within 1e-7.
Outcome lp_oracle() {
  Outcome o;
  Rng rng(1006);
  int cases = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const LinearProgram lp = testing::random_lp(rng, 1 + trial % 4, 1 + (trial / 4) % 8);
    const testing::VertexOracleResult expected = testing::vertex_enumeration(lp);
    ++cases;
    const LpSolution exact = solve_lp(lp, SolveMode::kExact);
    const LpSolution fl = solve_lp(lp, SolveMode::kFloat);
    if (exact.status != expected.status || fl.status != expected.status) {
      fail(o, "status mismatch, trial " + std::to_string(trial));
      continue;
    }
    if (expected.status != LpStatus::kOptimal) continue;
    if (exact.objective != expected.value) fail(o, "exact value mismatch, trial " + std::to_string(trial));
    const double want = to_double(expected.value);
    if (std::abs(to_double(fl.objective) - want) > 1e-7 * std::max(1.0, std::abs(want)))
      fail(o, "float value mismatch, trial " + std::to_string(trial));
  }
  if (o.pass) o.detail = std::to_string(cases) + " LPs";
  return o;
}

// 8. The SDP hierarchy columns are out of scope; the omission must be
// recorded in the README.
Outcome sos_columns_documented() {
  Outcome o;
  std::ifstream in(QUADLIN_README);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (text.find("sum-of-squares (SDP hierarchy) bound columns") == std::string::npos ||
      text.find("not reproduced") == std::string::npos) {
    fail(o, "README does not record the omission");
  } else {
    o.detail = "not reproduced; documented in README";
  }
  return o;
}

}  // namespace
}  // namespace quadlin

int main() {
  using quadlin::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 tournament optima 38/45/50", quadlin::tournament_optima},
      {"2 linearization round-trip", quadlin::linearization_round_trip},
      {"3 non-linearizability soundness", quadlin::non_linearizability_soundness},
      {"4 spanning-set equivalence", quadlin::spanning_set_equivalence},
      {"5 bound chain GL <= GGL <= LBB' = RLT1 <= LBB* <= OPT", quadlin::bound_chain},
      {"6 reformulation invariance of LBB'", quadlin::reformulation_invariance},
      {"7 LP solver vs vertex enumeration", quadlin::lp_oracle},
      {"8 SOS columns out of scope, documented", quadlin::sos_columns_documented},
  };
  bool all = true;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::printf("%s  %s  [%s] %.1fs\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(),
                quadlin::seconds_since(start));
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
