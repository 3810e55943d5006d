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

#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "colexwidth/automaton.hpp"
#include "colexwidth/colex.hpp"
#include "colexwidth/convexmn.hpp"
#include "colexwidth/error.hpp"
#include "colexwidth/langwidth.hpp"
#include "colexwidth/text_format.hpp"
#include "json.hpp"

namespace colexwidth::cli {

using nlohmann::json;

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest_string(std::string_view bytes) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return std::string("fnv1a64:") + buf;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Options {
  bool json = false;
  bool trim = false;
  std::string file;
  std::optional<std::uint64_t> cap;
  std::optional<std::size_t> max_k;
  std::string chains;
  std::string cert;
  bool raw = false;
};

struct Loaded {
  Dfa dfa;
  std::string digest;
  double parse_ms;
};

Loaded load(const Options& opt) {
  const auto start = Clock::now();
  const std::string text = slurp(opt.file);
  Dfa dfa = parse_dfa(text);
  if (opt.trim) {
    dfa = trim(dfa);
  } else {
    require_trim(dfa);
  }
  return {std::move(dfa), digest_string(text), ms_since(start)};
}

json pairs_json(const std::vector<StatePair>& pairs) {
  json out = json::array();
  for (const auto& [u, v] : pairs) out.push_back({u, v});
  return out;
}

json chains_json(const ChainPartition& chains) {
  json out = json::array();
  for (const auto& c : chains.chains()) out.push_back(c);
  return out;
}

std::string pairs_text(const std::vector<StatePair>& pairs) {
  std::string out;
  for (const auto& [u, v] : pairs) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  }
  return out;
}

template <typename Range>
std::string list_text(const Range& items) {
  std::string out;
  for (const auto& x : items) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

json certificate_json(const WitnessCertificate& cert) {
  return {{"k", cert.k()},
          {"states", cert.states},
          {"mus", cert.mus},
          {"gamma", cert.gamma},
          {"direction", to_string(cert.direction)}};
}

void print_certificate(std::ostream& out, const WitnessCertificate& cert) {
  out << "certificate:\n  states: " << list_text(cert.states) << "\n  mus:";
  for (const auto& m : cert.mus) out << " \"" << m << '"';
  out << "\n  gamma: \"" << cert.gamma << "\"\n  direction: " << to_string(cert.direction)
      << '\n';
}

WitnessCertificate certificate_from_json(const json& doc) {
  const json& c = doc.contains("certificate") ? doc.at("certificate") : doc;
  if (!c.is_object()) throw InputError("certificate must be a JSON object");
  for (const char* key : {"states", "mus", "gamma", "direction"}) {
    if (!c.contains(key)) throw InputError(std::string("certificate lacks '") + key + "'");
  }
  WitnessCertificate cert;
  try {
    cert.states = c.at("states").get<std::vector<StateId>>();
    cert.mus = c.at("mus").get<std::vector<Word>>();
    cert.gamma = c.at("gamma").get<Word>();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
  const auto dir = parse_direction(c.at("direction").is_string()
                                       ? c.at("direction").get<std::string>()
                                       : std::string());
  if (!dir) throw InputError("direction must be \"mus_below_gamma\" or \"gamma_below_mus\"");
  cert.direction = *dir;
  if (c.contains("k") && c.at("k") != cert.states.size()) {
    throw InputError("certificate k does not match the number of states");
  }
  return cert;
}

WitnessCertificate read_certificate(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  const std::string text =
      first != std::string::npos && (arg[first] == '{') ? arg : slurp(arg);
  try {
    return certificate_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("certificate is not valid JSON: ") + e.what());
  }
}

// The automaton width queries run on: the input itself when already
// minimal, otherwise its canonical minimum.
Dfa analysis_automaton(const Dfa& dfa) { return is_minimal(dfa) ? dfa : minimize(dfa); }

json stats_json(const DpStats& s) {
  return {{"bound", s.bound},
          {"limit", s.limit},
          {"tuples_total", s.tuples_total},
          {"tuples_pruned_acyclic_state", s.tuples_pruned_acyclic_state},
          {"tuples_pruned_no_common_cycle", s.tuples_pruned_no_common_cycle},
          {"tuples_explored", s.tuples_explored},
          {"path_cells", s.path_cells},
          {"cycle_cells", s.cycle_cells},
          {"max_level", s.max_level}};
}

struct Report {
  json doc;
  std::ostringstream text;
  int code = kOk;
};

void cmd_order(const Dfa& dfa, Report& r) {
  const StateOrder order = state_order(dfa);
  const auto pairs = order.pairs();
  const auto hasse = hasse_cover_edges(order);
  r.doc["states"] = dfa.state_count();
  r.doc["order"] = pairs_json(pairs);
  r.doc["hasse"] = pairs_json(hasse);
  r.text << "states: " << dfa.state_count() << "\norder: " << pairs_text(pairs)
         << "\nhasse: " << pairs_text(hasse) << '\n';
}

void cmd_width_dfa(const Dfa& dfa, Report& r) {
  const DfaWidth w = width_dfa(state_order(dfa));
  r.doc["width"] = w.width;
  r.doc["antichain"] = w.antichain.states;
  r.doc["chains"] = chains_json(w.chains);
  r.text << "width: " << w.width << "\nantichain: " << list_text(w.antichain.states)
         << "\nchains: " << format_chain_spec(w.chains) << '\n';
}

void cmd_width_lang(const Dfa& dfa, const Options& opt, Report& r) {
  const LanguageWidth w = width_lang(dfa, opt.cap, opt.max_k);
  r.doc["width"] = w.width;
  r.doc["exact"] = w.exact;
  r.doc["upper_bound"] = w.upper_bound;
  r.doc["certificate"] = w.certificate ? certificate_json(*w.certificate) : json(nullptr);
  r.doc["analyzed_dfa"] = serialize_dfa(w.automaton);
  json queries = json::array();
  for (const auto& q : w.queries) {
    queries.push_back({{"k", q.k},
                       {"found", q.certificate.has_value()},
                       {"exact", q.exact},
                       {"stats", stats_json(q.stats)}});
  }
  r.doc["queries"] = queries;
  r.text << "width: " << w.width << (w.exact ? "" : " (lower bound; search was capped)")
         << "\nexact: " << (w.exact ? "true" : "false") << "\nupper_bound: " << w.upper_bound
         << '\n';
  if (w.certificate) print_certificate(r.text, *w.certificate);
  for (const auto& q : w.queries) {
    r.text << "query k=" << q.k << ": " << (q.certificate ? "witness" : "none")
           << (q.exact ? "" : " (capped)") << ", gamma length <= " << q.stats.limit
           << ", tuples " << q.stats.tuples_explored << "/" << q.stats.tuples_total
           << ", cells " << q.stats.path_cells + q.stats.cycle_cells << '\n';
  }
}

void cmd_check_wheeler(const Dfa& dfa, Report& r) {
  const DfaWidth w = width_dfa(state_order(dfa));
  const bool wheeler = w.width == 1;
  r.doc["wheeler"] = wheeler;
  r.doc["width"] = w.width;
  r.text << (wheeler ? "true" : "false") << '\n';
  if (!wheeler) r.code = kPropertyFalse;
}

void cmd_minimize(const Dfa& dfa, Report& r) {
  const Dfa m = minimize(dfa);
  r.doc["states_before"] = dfa.state_count();
  r.doc["states_after"] = m.state_count();
  r.doc["dfa"] = serialize_dfa(m);
  r.text << serialize_dfa(m);
}

void cmd_psort_check(const Dfa& dfa, const Options& opt, Report& r) {
  const ChainAssignment chains = parse_chain_spec(opt.chains, dfa.state_count());
  const auto bad = incomparable_in_chain(state_order(dfa), chains);
  r.doc["p_sortable"] = !bad.has_value();
  r.doc["chains"] = chains_json(chains);
  if (bad) {
    r.doc["incomparable"] = {bad->first, bad->second};
    r.text << "false\nstates " << bad->first << " and " << bad->second
           << " share a chain but are incomparable\n";
    r.code = kPropertyFalse;
  } else {
    r.text << "true\n";
  }
}

void cmd_psort_min(const Dfa& dfa, const Options& opt, Report& r) {
  const ChainAssignment chains = parse_chain_spec(opt.chains, dfa.state_count());
  const PSortableMinimum m = minimize_p_sortable(dfa, chains);
  r.doc["states_before"] = dfa.state_count();
  r.doc["states_after"] = m.dfa.state_count();
  r.doc["dfa"] = serialize_dfa(m.dfa);
  r.doc["chains"] = chains_json(m.chains);
  r.text << serialize_dfa(m.dfa) << "# chains: " << format_chain_spec(m.chains) << '\n';
}

void cmd_verify_witness(const Dfa& dfa, const Options& opt, Report& r) {
  const WitnessCertificate cert = read_certificate(opt.cert);
  const Dfa target = opt.raw ? dfa : analysis_automaton(dfa);
  const VerificationResult v = verify_certificate(target, cert);
  r.doc["valid"] = v.ok;
  r.doc["reasons"] = v.reasons;
  r.doc["certificate"] = certificate_json(cert);
  r.text << (v.ok ? "true" : "false") << '\n';
  for (const auto& reason : v.reasons) r.text << "  " << reason << '\n';
  if (!v.ok) r.code = kPropertyFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Co-lex orders, DFA width and language width"};
  app.name("colexwidth");
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Print a JSON report");
  app.add_flag("--trim", opt.trim, "Trim the automaton before analysis");

  const auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "DFA text file")->required();
    return sub;
  };
  with_file(app.add_subcommand("order", "Print the state order and its Hasse edges"));
  with_file(app.add_subcommand("width-dfa", "Width, antichain and chain partition"));
  auto* lang = with_file(app.add_subcommand("width-lang", "Width of the accepted language"));
  lang->add_option("--cap", opt.cap, "Cap on the cycle-label length explored")
      ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
  lang->add_option("--max-k", opt.max_k, "Stop the search at this width")
      ->check(CLI::PositiveNumber);
  with_file(app.add_subcommand("check-wheeler", "Exit 0 iff the DFA has width 1"));
  with_file(app.add_subcommand("minimize", "Print the minimum DFA"));
  auto* pcheck = with_file(app.add_subcommand("psort-check", "Check a chain assignment"));
  pcheck->add_option("--chains", opt.chains, "Chains, e.g. 0,1,4|2,3,5")->required();
  auto* pmin = with_file(app.add_subcommand("psort-min", "Minimum DFA for a chain assignment"));
  pmin->add_option("--chains", opt.chains, "Chains, e.g. 0,1,4|2,3,5")->required();
  auto* verify = with_file(app.add_subcommand("verify-witness", "Re-check a certificate"));
  verify->add_option("--cert", opt.cert, "Certificate JSON, inline or a path")->required();
  verify->add_flag("--raw", opt.raw,
                   "Check against the file as given instead of its minimum DFA");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  Report report;
  try {
    const Loaded in = load(opt);
    const auto start = Clock::now();
    if (command == "order") {
      cmd_order(in.dfa, report);
    } else if (command == "width-dfa") {
      cmd_width_dfa(in.dfa, report);
    } else if (command == "width-lang") {
      cmd_width_lang(in.dfa, opt, report);
    } else if (command == "check-wheeler") {
      cmd_check_wheeler(in.dfa, report);
    } else if (command == "minimize") {
      cmd_minimize(in.dfa, report);
    } else if (command == "psort-check") {
      cmd_psort_check(in.dfa, opt, report);
    } else if (command == "psort-min") {
      cmd_psort_min(in.dfa, opt, report);
    } else {
      cmd_verify_witness(in.dfa, opt, report);
    }
    report.doc["command"] = command;
    report.doc["input"] = opt.file;
    report.doc["input_digest"] = in.digest;
    report.doc["timings"] = {{"parse_ms", in.parse_ms}, {"analysis_ms", ms_since(start)}};
  } catch (const NotTrimError& e) {
    err << "error: " << e.what() << '\n' << "hint: --trim removes useless states first\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    if (command == "width-lang") err << "hint: --cap N bounds the cycle length explored\n";
    return kResourceError;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }

  if (opt.json) {
    out << report.doc.dump(2) << '\n';
  } else {
    out << report.text.str();
  }
  return report.code;
}

}  // namespace colexwidth::cli
