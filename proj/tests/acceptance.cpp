// Copyright 2026 The colexwidth Authors
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

// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "colexwidth/colex.hpp"
#include "colexwidth/convexmn.hpp"
#include "colexwidth/langwidth.hpp"
#include "colexwidth/oracle.hpp"
#include "colexwidth/random_dfa.hpp"
#include "json.hpp"
#include "test_util.hpp"

namespace {

using namespace colexwidth;
using colexwidth::testing::fixture;
using colexwidth::testing::fixture_path;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      if (ok) detail << "failed: ";
      detail << what << "; ";
      ok = false;
    }
  }
};

json cli_json(std::vector<std::string> args, int* code = nullptr) {
  args.insert(args.begin(), "--json");
  std::ostringstream out;
  std::ostringstream err;
  const int rc = cli::run(args, out, err);
  if (code) *code = rc;
  if (out.str().empty()) return json::object();
  return json::parse(out.str());
}

int failures = 0;

void criterion(int id, const std::string& title, double limit_s,
               const std::function<void(Check&)>& body) {
  Check check;
  const auto start = Clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= limit_s) {
    check.require(false, "runtime " + std::to_string(secs) + " s over the limit");
  }
  if (!check.ok) ++failures;
  std::printf("%s criterion %d: %s [%.3f s, limit %.0f s] %s\n", check.ok ? "PASS" : "FAIL", id,
              title.c_str(), secs, limit_s, check.detail.str().c_str());
  std::fflush(stdout);
}

void fixture_a1(Check& c) {
  const json order = cli_json({"order", fixture_path("a1.dfa")});
  c.require(order["order"] == json::parse("[[0,1],[0,2],[0,3],[0,4],[0,5],[1,3],[1,4],[1,5],"
                                          "[2,3],[2,4],[2,5]]"),
            "order relation differs: " + order["order"].dump());
  const json width = cli_json({"width-dfa", fixture_path("a1.dfa")});
  c.require(width["width"] == 3, "width " + width["width"].dump());
  c.require(width["antichain"] == json::parse("[3,4,5]"), "antichain " + width["antichain"].dump());
  c.require(width["chains"].size() == 3, "chain count " + width["chains"].dump());
  c.detail << "width 3, antichain " << width["antichain"].dump() << ", chains "
           << width["chains"].dump() << "; ";
}

void language_width_a1(Check& c) {
  const json r = cli_json({"width-lang", fixture_path("a1.dfa")});
  c.require(r["width"] == 2, "width " + r["width"].dump());
  c.require(r["exact"] == true, "not exact");
  c.require(r["certificate"].is_object(), "no certificate");
  if (!r["certificate"].is_object()) return;
  c.require(r["certificate"]["states"] == json::parse("[1,2]"), "certificate states");
  c.require(r["certificate"]["direction"] == "mus_below_gamma", "direction");
  int code = -1;
  cli_json({"verify-witness", fixture_path("a1.dfa"), "--cert", r.dump()}, &code);
  c.require(code == 0, "certificate does not re-verify");
  bool k3_refuted = false;
  for (const auto& q : r["queries"]) {
    if (q["k"] == 3) {
      k3_refuted = q["found"] == false && q["exact"] == true &&
                   q["stats"]["tuples_pruned_acyclic_state"] == q["stats"]["tuples_total"];
    }
  }
  c.require(k3_refuted, "k=3 not refuted exactly by cycle pruning");
  c.detail << "certificate " << r["certificate"].dump() << "; k=3 refuted with all "
           << "tuples pruned; ";
}

void fixtures_a2_a3(Check& c, const std::string& name, const std::string& chains) {
  const auto start = Clock::now();
  const Dfa dfa = fixture(name);
  c.require(language_equivalent(dfa, fixture("a1.dfa")), name + " language differs");
  const json w = cli_json({"width-dfa", fixture_path(name)});
  c.require(w["width"] == 2, name + " width " + w["width"].dump());
  int code = -1;
  const json p = cli_json({"psort-check", fixture_path(name), "--chains", chains}, &code);
  c.require(code == 0 && p["p_sortable"] == true, name + " chains rejected");
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.require(secs < 1.0, name + " took " + std::to_string(secs) + " s");
  c.detail << name << ": width 2, chains " << chains << " accepted, " << secs << " s; ";
}

void oracle_equivalence(Check& c) {
  std::size_t leq_mismatch = 0;
  std::size_t width_mismatch = 0;
  std::size_t pairs = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    std::mt19937_64 rng(seed);
    const oracle::RandomDfaParams params{1 + seed % 5, 1 + (seed / 5) % 3, 0.6, 0.4};
    const Dfa dfa = oracle::random_trim_dfa_retry(params, rng);
    const std::size_t n = dfa.state_count();
    const ColexRelation rel = existential_leq(dfa);
    for (StateId u = 0; u < n; ++u) {
      for (StateId v = 0; v < n; ++v) {
        ++pairs;
        if (rel.leq_exists(u, v) != oracle::brute_leq(dfa, u, v, n * n)) ++leq_mismatch;
      }
    }
    const StateOrder order = state_order(rel);
    if (width_dfa(order).width != oracle::brute_width(order)) ++width_mismatch;
  }
  c.require(leq_mismatch == 0, std::to_string(leq_mismatch) + " relation mismatches");
  c.require(width_mismatch == 0, std::to_string(width_mismatch) + " width mismatches");
  c.detail << "200 automata, " << pairs << " state pairs, " << leq_mismatch << " + "
           << width_mismatch << " mismatches; ";
}

void witness_soundness(Check& c) {
  std::size_t certs = 0;
  std::size_t bad = 0;
  std::size_t non_monotone = 0;
  std::size_t queries = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    std::mt19937_64 rng(seed * 31);
    const oracle::RandomDfaParams params{2 + seed % 4, 1 + seed % 2, 0.8, 0.5};
    const Dfa dfa = minimize(oracle::random_trim_dfa_retry(params, rng));
    const std::size_t n = dfa.state_count();
    bool previous = true;
    for (std::size_t k = 2; k <= std::min<std::size_t>(n, 5); ++k) {
      const DpBounds bounds = k <= 3 ? DpBounds::exact(n, k) : DpBounds::capped(n, k, 4033);
      const SearchResult r = width_at_least(dfa, k, bounds);
      ++queries;
      const bool found = r.query.certificate.has_value();
      if (found) {
        ++certs;
        if (!verify_certificate(r.automaton, *r.query.certificate) ||
            !oracle::check_certificate(r.automaton, *r.query.certificate)) {
          ++bad;
        }
      }
      if (found && !previous) ++non_monotone;
      previous = found;
    }
    const LanguageWidth w = width_lang(dfa);
    if (w.certificate) {
      ++certs;
      if (!verify_certificate(w.automaton, *w.certificate)) ++bad;
    }
  }
  c.require(certs > 0, "no certificates were produced");
  c.require(bad == 0, std::to_string(bad) + " certificates failed verification");
  c.require(non_monotone == 0, std::to_string(non_monotone) + " monotonicity violations");
  c.detail << queries << " queries, " << certs << " certificates, " << bad << " invalid, "
           << non_monotone << " non-monotone; ";
}

void k2_cross_check(Check& c) {
  std::size_t disagreements = 0;
  std::size_t positive = 0;
  std::size_t tested = 0;
  std::uint64_t seed = 0;
  while (tested < 50) {
    std::mt19937_64 rng(++seed * 131);
    const oracle::RandomDfaParams params{2 + seed % 3, 1 + seed % 2, 0.85, 0.5};
    const Dfa dfa = minimize(oracle::random_trim_dfa_retry(params, rng));
    const std::size_t n = dfa.state_count();
    if (n < 2 || n > 4) continue;
    ++tested;
    const std::uint64_t bound = bound_n(n, 2);
    const SearchResult ours = width_at_least(dfa, 2, DpBounds::exact(n, 2));
    const auto theirs = oracle::brute_witness_k2(dfa, bound, bound);
    if (ours.query.certificate.has_value() != theirs.has_value()) ++disagreements;
    if (theirs) ++positive;
  }
  c.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  c.detail << tested << " minimum automata (" << positive << " with a witness), scanned to "
           << "the full bound (" << bound_n(4, 2) << " at 4 states), " << disagreements
           << " disagreements; ";
}

bool locally_minimal(const PSortableMinimum& m) {
  const StateOrder order = state_order(m.dfa);
  const StateEquivalence nerode = nerode_classes(m.dfa);
  const std::size_t n = m.dfa.state_count();
  for (StateId u = 0; u < n; ++u) {
    for (StateId v = u + 1; v < n; ++v) {
      if (m.chains.chain_of[u] != m.chains.chain_of[v]) continue;
      std::vector<std::uint64_t> labels(n);
      for (StateId q = 0; q < n; ++q) labels[q] = q == v ? u : q;
      const StateEquivalence merged = StatePartition::from_labels(labels);
      if (refines(merged, nerode) && is_p_convex(merged, m.chains, order) &&
          is_right_invariant(merged, m.dfa)) {
        return false;
      }
    }
  }
  return true;
}

void convex_minimization(Check& c) {
  std::size_t failures_lang = 0;
  std::size_t failures_sort = 0;
  std::size_t failures_idem = 0;
  std::size_t failures_local = 0;
  std::size_t shrunk = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    std::mt19937_64 rng(seed * 17);
    const Dfa dfa = oracle::random_trim_dfa_retry({3 + seed % 5, 1 + seed % 3, 0.7, 0.5}, rng);
    const ChainAssignment chains = width_dfa(state_order(dfa)).chains;
    const PSortableMinimum m = minimize_p_sortable(dfa, chains);
    if (m.dfa.state_count() < dfa.state_count()) ++shrunk;
    if (!language_equivalent(m.dfa, dfa)) ++failures_lang;
    if (!is_p_sortable(m.dfa, m.chains)) ++failures_sort;
    const PSortableMinimum again = minimize_p_sortable(m.dfa, m.chains);
    if (!(again.dfa == m.dfa && again.chains == m.chains)) ++failures_idem;
    if (!locally_minimal(m)) ++failures_local;
  }
  const Dfa acstar = fixture("acstar.dfa");
  const PSortableMinimum ac =
      minimize_p_sortable(acstar, ChainPartition::from_blocks(3, {{0, 1, 2}}));
  c.require(failures_lang == 0, std::to_string(failures_lang) + " language changes");
  c.require(failures_sort == 0, std::to_string(failures_sort) + " lost P-sortability");
  c.require(failures_idem == 0, std::to_string(failures_idem) + " not idempotent");
  c.require(failures_local == 0, std::to_string(failures_local) + " not locally minimal");
  c.require(ac.dfa.state_count() == 2, "ac* gave " + std::to_string(ac.dfa.state_count()));
  c.detail << "100 instances (" << shrunk << " shrank), ac* 3 -> " << ac.dfa.state_count()
           << " states; ";
}

void cell_counts(Check& c) {
  std::printf("  %-12s %2s %3s %8s %8s %10s %10s %7s\n", "fixture", "k", "|Q|", "bound",
              "tuples", "path", "cycle", "levels");
  for (const char* name : {"a1.dfa", "a2.dfa", "a3.dfa", "acstar.dfa", "aloop.dfa"}) {
    const Dfa dfa = minimize(fixture(name));
    for (std::size_t k : {2, 3}) {
      const SearchResult r = width_at_least(dfa, k, DpBounds::exact(dfa.state_count(), k));
      const std::size_t n = r.automaton.state_count();
      const DpStats& s = r.query.stats;
      std::printf("  %-12s %2zu %3zu %8llu %4llu/%-3llu %10llu %10llu %7llu\n", name, k, n,
                  static_cast<unsigned long long>(s.bound),
                  static_cast<unsigned long long>(s.tuples_explored),
                  static_cast<unsigned long long>(s.tuples_total),
                  static_cast<unsigned long long>(s.path_cells),
                  static_cast<unsigned long long>(s.cycle_cells),
                  static_cast<unsigned long long>(s.max_level));
      c.require(s.bound == bound_n(n, k), std::string(name) + " bound mismatch");
      c.require(r.query.exact, std::string(name) + " query not exact");
      // Two path tables of at most (N'+1) levels, and per explored tuple two
      // cycle tables of at most |Q|^k tuples per level.
      const std::uint64_t levels = s.bound + 1;
      std::uint64_t tuples = 1;
      for (std::size_t i = 0; i < k; ++i) tuples *= n;
      c.require(s.path_cells <= 2 * levels * n, std::string(name) + " path cells over bound");
      c.require(s.cycle_cells <= 2 * levels * tuples * std::max<std::uint64_t>(1, s.tuples_explored),
                std::string(name) + " cycle cells over bound");
    }
  }
  c.detail << "cell counts logged above; ";
}

}  // namespace

int main() {
  criterion(1, "A1 order, width 3, antichain {3,4,5}", 1.0, fixture_a1);
  criterion(2, "width-lang A1 = 2 with verified certificate, k=3 refuted", 10.0,
            language_width_a1);
  criterion(3, "A2/A3 equivalent to A1, width 2, chain partitions accepted", 2.0, [](Check& c) {
    fixtures_a2_a3(c, "a2.dfa", "0,1,4|2,3,5,6");
    fixtures_a2_a3(c, "a3.dfa", "0,1,3|2,4,5,6");
  });
  criterion(4, "existential order and width match brute force on 200 DFAs", 60.0,
            oracle_equivalence);
  criterion(5, "certificate soundness and monotonicity", 300.0, witness_soundness);
  criterion(6, "k=2 exact search agrees with the oracle on 50 minimum DFAs", 300.0,
            k2_cross_check);
  criterion(7, "P-sortable minimization properties on 100 instances", 120.0,
            convex_minimization);
  criterion(8, "DP cell counts against the length bound, k in {2,3}", 60.0, cell_counts);
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
