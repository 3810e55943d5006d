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

#include "colexwidth/text_format.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "colexwidth/error.hpp"

namespace colexwidth {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim_view(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_number(std::string_view token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw FormatError(line, std::string("expected ") + what + ", got '" +
                                std::string(token) + "'");
  }
  return value;
}

struct PendingTransition {
  std::size_t line;
  std::uint64_t from;
  char symbol;
  std::uint64_t to;
};

}  // namespace

Dfa parse_dfa(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::optional<std::uint64_t> states;
  std::optional<std::uint64_t> initial;
  std::vector<std::pair<std::size_t, std::uint64_t>> finals;
  std::vector<PendingTransition> transitions;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim_view(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw FormatError(line_no, "expected 'key: value'");
    }
    const std::string_view key = trim_view(line.substr(0, colon));
    const auto values = split_ws(line.substr(colon + 1));

    if (key == "alphabet") {
      if (alphabet) throw FormatError(line_no, "alphabet declared twice");
      std::string symbols;
      for (auto v : values) {
        if (v.size() != 1) {
          throw FormatError(line_no, "alphabet symbols must be single characters, got '" +
                                         std::string(v) + "'");
        }
        symbols.push_back(v[0]);
      }
      try {
        alphabet.emplace(symbols);
      } catch (const InputError& e) {
        throw FormatError(line_no, e.what());
      }
    } else if (key == "states") {
      if (states) throw FormatError(line_no, "states declared twice");
      if (values.size() != 1) throw FormatError(line_no, "states takes one number");
      states = parse_number(values[0], line_no, "a state count");
      if (*states == 0) throw FormatError(line_no, "an automaton needs at least one state");
    } else if (key == "initial") {
      if (initial) throw FormatError(line_no, "initial declared twice");
      if (values.size() != 1) throw FormatError(line_no, "initial takes one state");
      initial = parse_number(values[0], line_no, "a state id");
    } else if (key == "final") {
      for (auto v : values) finals.emplace_back(line_no, parse_number(v, line_no, "a state id"));
    } else if (key == "trans") {
      if (values.size() != 3 || values[1].size() != 1) {
        throw FormatError(line_no, "expected 'trans: <from> <symbol> <to>'");
      }
      transitions.push_back({line_no, parse_number(values[0], line_no, "a state id"),
                             values[1][0], parse_number(values[2], line_no, "a state id")});
    } else {
      throw FormatError(line_no, "unknown key '" + std::string(key) + "'");
    }
  }

  if (!alphabet) throw FormatError(0, "missing 'alphabet:' line");
  if (!states) throw FormatError(0, "missing 'states:' line");
  if (!initial) throw FormatError(0, "missing 'initial:' line");
  if (*states >= kNoState) throw FormatError(0, "state count too large");
  const auto check_state = [&](std::uint64_t q, std::size_t line) {
    if (q >= *states) {
      throw FormatError(line, "state " + std::to_string(q) + " out of range (states: " +
                                  std::to_string(*states) + ")");
    }
    return static_cast<StateId>(q);
  };
  Dfa dfa(*alphabet, static_cast<std::size_t>(*states), check_state(*initial, 0));
  for (const auto& [line, q] : finals) dfa.set_final(check_state(q, line));
  for (const auto& t : transitions) {
    const StateId from = check_state(t.from, t.line);
    const StateId to = check_state(t.to, t.line);
    if (!alphabet->contains(t.symbol)) {
      throw FormatError(t.line, std::string("symbol '") + t.symbol + "' is not in the alphabet");
    }
    try {
      dfa.add_transition(from, t.symbol, to);
    } catch (const InputError& e) {
      throw FormatError(t.line, e.what());
    }
  }
  return dfa;
}

Dfa read_dfa_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dfa(buffer.str());
}

std::string serialize_dfa(const Dfa& dfa) {
  std::ostringstream out;
  out << "alphabet:";
  for (char c : dfa.alphabet().symbols()) out << ' ' << c;
  out << "\nstates: " << dfa.state_count() << "\ninitial: " << dfa.initial() << "\nfinal:";
  for (StateId q : dfa.finals()) out << ' ' << q;
  out << '\n';
  for (StateId q = 0; q < dfa.state_count(); ++q) {
    for (std::size_t r = 0; r < dfa.symbol_count(); ++r) {
      const StateId t = dfa.next(q, r);
      if (t != kNoState) {
        out << "trans: " << q << ' ' << dfa.alphabet().symbol(r) << ' ' << t << '\n';
      }
    }
  }
  return out.str();
}

ChainPartition parse_chain_spec(std::string_view spec, std::size_t state_count) {
  std::vector<std::vector<StateId>> blocks;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t bar = std::min(spec.find('|', pos), spec.size());
    const std::string_view block = spec.substr(pos, bar - pos);
    pos = bar + 1;
    std::vector<StateId> chain;
    std::size_t p = 0;
    while (p <= block.size()) {
      const std::size_t comma = std::min(block.find(',', p), block.size());
      const std::string_view token = trim_view(block.substr(p, comma - p));
      p = comma + 1;
      if (token.empty()) throw InputError("empty state id in chain spec");
      std::uint64_t value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size() || value >= kNoState) {
        throw InputError("bad state id '" + std::string(token) + "' in chain spec");
      }
      chain.push_back(static_cast<StateId>(value));
    }
    blocks.push_back(std::move(chain));
  }
  return ChainPartition::from_blocks(state_count, blocks);
}

std::string format_chain_spec(const ChainPartition& chains) {
  std::string out;
  const auto blocks = chains.chains();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out.push_back('|');
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(blocks[b][i]);
    }
  }
  return out;
}

}  // namespace colexwidth
