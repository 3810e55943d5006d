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

#include "colexwidth/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "colexwidth/error.hpp"

namespace colexwidth {

Alphabet::Alphabet() { rank_.fill(-1); }

Alphabet::Alphabet(std::string_view symbols) : Alphabet() {
  for (char c : symbols) {
    const auto uc = static_cast<unsigned char>(c);
    if (std::isspace(uc) || std::iscntrl(uc) || c == '#') {
      throw InputError("alphabet symbol must be a printable non-space "
                       "character other than '#'");
    }
    if (contains(c)) {
      throw InputError(std::string("duplicate alphabet symbol '") + c + "'");
    }
    rank_[index(c)] = static_cast<std::int16_t>(symbols_.size());
    symbols_.push_back(c);
  }
}

std::size_t Alphabet::rank(char c) const {
  const auto r = rank_[index(c)];
  if (r < 0) {
    throw InputError(std::string("character '") + c + "' is not in the alphabet");
  }
  return static_cast<std::size_t>(r);
}

Dfa::Dfa(Alphabet alphabet, std::size_t state_count, StateId initial)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(initial),
      final_(state_count, 0),
      delta_(state_count * alphabet_.size(), kNoState) {
  if (state_count == 0) throw InputError("an automaton needs at least one state");
  if (state_count >= kNoState) throw InputError("too many states");
  check_state(initial);
}

void Dfa::check_state(StateId q) const {
  if (q >= state_count_) {
    throw InputError("state " + std::to_string(q) + " out of range (states: " +
                     std::to_string(state_count_) + ")");
  }
}

void Dfa::set_initial(StateId q) {
  check_state(q);
  initial_ = q;
}

void Dfa::set_final(StateId q, bool accepting) {
  check_state(q);
  final_[q] = accepting ? 1 : 0;
}

std::vector<StateId> Dfa::finals() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < state_count_; ++q) {
    if (final_[q]) out.push_back(q);
  }
  return out;
}

void Dfa::add_transition(StateId from, char c, StateId to) {
  check_state(from);
  check_state(to);
  auto& slot = delta_[static_cast<std::size_t>(from) * alphabet_.size() +
                      alphabet_.rank(c)];
  if (slot != kNoState && slot != to) {
    throw InputError("nondeterministic transition: state " +
                     std::to_string(from) + " on '" + std::string(1, c) +
                     "' goes to both " + std::to_string(slot) + " and " +
                     std::to_string(to));
  }
  slot = to;
}

std::size_t Dfa::transition_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(delta_.begin(), delta_.end(),
                    [](StateId t) { return t != kNoState; }));
}

std::optional<StateId> Dfa::walk(StateId from, std::string_view word) const {
  check_state(from);
  StateId q = from;
  for (char c : word) {
    q = next(q, alphabet_.rank(c));
    if (q == kNoState) return std::nullopt;
  }
  return q;
}

bool Dfa::accepts(std::string_view word) const {
  const auto q = run(word);
  return q && is_final(*q);
}

namespace {

std::vector<std::uint8_t> forward_reachable(const Dfa& dfa) {
  std::vector<std::uint8_t> seen(dfa.state_count(), 0);
  std::vector<StateId> stack{dfa.initial()};
  seen[dfa.initial()] = 1;
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (std::size_t r = 0; r < dfa.symbol_count(); ++r) {
      const StateId t = dfa.next(q, r);
      if (t != kNoState && !seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

std::vector<std::uint8_t> coreachable(const Dfa& dfa) {
  const std::size_t n = dfa.state_count();
  std::vector<std::vector<StateId>> reverse(n);
  for (StateId q = 0; q < n; ++q) {
    for (std::size_t r = 0; r < dfa.symbol_count(); ++r) {
      const StateId t = dfa.next(q, r);
      if (t != kNoState) reverse[t].push_back(q);
    }
  }
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<StateId> stack;
  for (StateId q = 0; q < n; ++q) {
    if (dfa.is_final(q)) {
      seen[q] = 1;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (StateId p : reverse[q]) {
      if (!seen[p]) {
        seen[p] = 1;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

std::string join_states(const std::vector<StateId>& states) {
  std::ostringstream out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i) out << ' ';
    out << states[i];
  }
  return out.str();
}

}  // namespace

std::string TrimReport::describe() const {
  if (ok()) return "ok";
  std::ostringstream out;
  const char* sep = "";
  if (empty_language) {
    out << "language is empty";
    sep = "; ";
  }
  if (!unreachable.empty()) {
    out << sep << "unreachable states: " << join_states(unreachable);
    sep = "; ";
  }
  if (!not_coreachable.empty()) {
    out << sep << "states reaching no final state: "
        << join_states(not_coreachable);
  }
  return out.str();
}

TrimReport validate_trim(const Dfa& dfa) {
  TrimReport report;
  const auto reach = forward_reachable(dfa);
  const auto coreach = coreachable(dfa);
  for (StateId q = 0; q < dfa.state_count(); ++q) {
    if (!reach[q]) report.unreachable.push_back(q);
    if (!coreach[q]) report.not_coreachable.push_back(q);
  }
  report.empty_language = !coreach[dfa.initial()];
  return report;
}

void require_trim(const Dfa& dfa) {
  const TrimReport report = validate_trim(dfa);
  if (report.empty_language) {
    throw EmptyLanguageError("the automaton accepts no word");
  }
  if (!report.ok()) {
    throw NotTrimError("automaton is not trim (" + report.describe() +
                       "); run validate_trim or trim it explicitly");
  }
}

Dfa trim(const Dfa& dfa) {
  const auto reach = forward_reachable(dfa);
  const auto coreach = coreachable(dfa);
  if (!coreach[dfa.initial()]) {
    throw EmptyLanguageError("the automaton accepts no word");
  }
  std::vector<StateId> new_id(dfa.state_count(), kNoState);
  StateId next_id = 0;
  for (StateId q = 0; q < dfa.state_count(); ++q) {
    if (reach[q] && coreach[q]) new_id[q] = next_id++;
  }
  Dfa out(dfa.alphabet(), next_id, new_id[dfa.initial()]);
  for (StateId q = 0; q < dfa.state_count(); ++q) {
    if (new_id[q] == kNoState) continue;
    if (dfa.is_final(q)) out.set_final(new_id[q]);
    for (std::size_t r = 0; r < dfa.symbol_count(); ++r) {
      const StateId t = dfa.next(q, r);
      if (t != kNoState && new_id[t] != kNoState) {
        out.add_transition(new_id[q], dfa.alphabet().symbol(r), new_id[t]);
      }
    }
  }
  return out;
}

std::strong_ordering colex_compare(std::string_view a, std::string_view b,
                                   const Alphabet& alphabet) {
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
    const std::size_t ra = alphabet.rank(*ia);
    const std::size_t rb = alphabet.rank(*ib);
    if (ra != rb) return ra <=> rb;
  }
  // Validate the unread remainder as well.
  for (; ia != a.rend(); ++ia) alphabet.rank(*ia);
  for (; ib != b.rend(); ++ib) alphabet.rank(*ib);
  return a.size() <=> b.size();
}

std::vector<std::vector<StateId>> StatePartition::blocks() const {
  std::vector<std::vector<StateId>> out(class_count);
  for (StateId q = 0; q < class_of.size(); ++q) out[class_of[q]].push_back(q);
  return out;
}

StatePartition StatePartition::identity(std::size_t n) {
  StatePartition p;
  p.class_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.class_of[i] = static_cast<std::uint32_t>(i);
  p.class_count = n;
  return p;
}

StatePartition StatePartition::from_labels(std::span<const std::uint64_t> labels) {
  StatePartition p;
  p.class_of.resize(labels.size());
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] =
        ids.try_emplace(labels[i], static_cast<std::uint32_t>(ids.size()));
    p.class_of[i] = it->second;
  }
  p.class_count = ids.size();
  return p;
}

StatePartition nerode_classes(const Dfa& dfa) {
  require_trim(dfa);
  const std::size_t n = dfa.state_count();
  const std::size_t sigma = dfa.symbol_count();

  // Moore refinement. In a trim automaton a missing edge is the only way to
  // reach the empty residual, so "undefined" acts as one extra class.
  std::vector<std::uint32_t> cls(n);
  for (StateId q = 0; q < n; ++q) cls[q] = dfa.is_final(q) ? 1 : 0;
  std::size_t count = 0;
  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> signature_ids;
    std::vector<std::uint32_t> next(n);
    for (StateId q = 0; q < n; ++q) {
      std::vector<std::uint32_t> sig;
      sig.reserve(sigma + 1);
      sig.push_back(cls[q]);
      for (std::size_t r = 0; r < sigma; ++r) {
        const StateId t = dfa.next(q, r);
        sig.push_back(t == kNoState ? static_cast<std::uint32_t>(-1) : cls[t]);
      }
      auto [it, inserted] = signature_ids.try_emplace(
          std::move(sig), static_cast<std::uint32_t>(signature_ids.size()));
      next[q] = it->second;
    }
    const std::size_t new_count = signature_ids.size();
    cls = std::move(next);
    if (new_count == count) break;
    count = new_count;
  }
  std::vector<std::uint64_t> labels(cls.begin(), cls.end());
  return StatePartition::from_labels(labels);
}

bool is_minimal(const Dfa& dfa) {
  return nerode_classes(dfa).class_count == dfa.state_count();
}

Dfa quotient(const Dfa& dfa, const StatePartition& partition) {
  if (partition.class_of.size() != dfa.state_count()) {
    throw InputError("partition does not cover the automaton's states");
  }
  const std::size_t sigma = dfa.symbol_count();
  Dfa out(dfa.alphabet(), partition.class_count,
          partition.class_of[dfa.initial()]);
  std::vector<StateId> target(partition.class_count * sigma, kNoState);
  std::vector<std::uint8_t> seen(partition.class_count, 0);
  std::vector<std::uint8_t> accepting(partition.class_count, 0);
  for (StateId q = 0; q < dfa.state_count(); ++q) {
    const std::uint32_t c = partition.class_of[q];
    const bool first = !seen[c];
    seen[c] = 1;
    if (first) {
      accepting[c] = dfa.is_final(q);
    } else if (accepting[c] != dfa.is_final(q)) {
      throw InvariantError("class " + std::to_string(c) +
                           " mixes final and non-final states");
    }
    for (std::size_t r = 0; r < sigma; ++r) {
      const StateId t = dfa.next(q, r);
      const StateId tc = t == kNoState ? kNoState : partition.class_of[t];
      StateId& slot = target[c * sigma + r];
      if (first) {
        slot = tc;
      } else if (slot != tc) {
        throw InvariantError("partition is not right-invariant: class " +
                             std::to_string(c) + " disagrees on '" +
                             std::string(1, dfa.alphabet().symbol(r)) + "'");
      }
    }
  }
  for (std::uint32_t c = 0; c < partition.class_count; ++c) {
    if (!seen[c]) throw InputError("partition has an empty class");
    if (accepting[c]) out.set_final(c);
    for (std::size_t r = 0; r < sigma; ++r) {
      if (target[c * sigma + r] != kNoState) {
        out.add_transition(c, dfa.alphabet().symbol(r), target[c * sigma + r]);
      }
    }
  }
  return out;
}

std::vector<StateId> bfs_numbering(const Dfa& dfa) {
  std::vector<StateId> new_id(dfa.state_count(), kNoState);
  std::deque<StateId> queue{dfa.initial()};
  StateId next_id = 0;
  new_id[dfa.initial()] = next_id++;
  while (!queue.empty()) {
    const StateId q = queue.front();
    queue.pop_front();
    for (std::size_t r = 0; r < dfa.symbol_count(); ++r) {
      const StateId t = dfa.next(q, r);
      if (t != kNoState && new_id[t] == kNoState) {
        new_id[t] = next_id++;
        queue.push_back(t);
      }
    }
  }
  // Unreachable states keep their relative order after the reachable ones.
  for (auto& id : new_id) {
    if (id == kNoState) id = next_id++;
  }
  return new_id;
}

Dfa renumber(const Dfa& dfa, std::span<const StateId> new_id) {
  if (new_id.size() != dfa.state_count()) {
    throw InputError("renumbering does not cover the automaton's states");
  }
  Dfa out(dfa.alphabet(), dfa.state_count(), new_id[dfa.initial()]);
  for (StateId q = 0; q < dfa.state_count(); ++q) {
    if (dfa.is_final(q)) out.set_final(new_id[q]);
    for (std::size_t r = 0; r < dfa.symbol_count(); ++r) {
      const StateId t = dfa.next(q, r);
      if (t != kNoState) {
        out.add_transition(new_id[q], dfa.alphabet().symbol(r), new_id[t]);
      }
    }
  }
  return out;
}

Dfa canonical(const Dfa& dfa) { return renumber(dfa, bfs_numbering(dfa)); }

Dfa minimize(const Dfa& dfa) {
  return canonical(quotient(dfa, nerode_classes(dfa)));
}

bool language_equivalent(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw InputError("language_equivalent: alphabets differ ('" +
                     a.alphabet().symbols() + "' vs '" +
                     b.alphabet().symbols() + "')");
  }
  // Product of the completed automata; kNoState plays the private sink.
  const std::size_t sigma = a.symbol_count();
  const auto encode = [&](StateId p, StateId q) {
    const std::uint64_t pp = p == kNoState ? a.state_count() : p;
    const std::uint64_t qq = q == kNoState ? b.state_count() : q;
    return pp * (b.state_count() + 1) + qq;
  };
  const auto accepting = [](const Dfa& d, StateId q) {
    return q != kNoState && d.is_final(q);
  };
  std::vector<std::uint8_t> seen((a.state_count() + 1) * (b.state_count() + 1), 0);
  std::vector<std::pair<StateId, StateId>> stack{{a.initial(), b.initial()}};
  seen[encode(a.initial(), b.initial())] = 1;
  while (!stack.empty()) {
    const auto [p, q] = stack.back();
    stack.pop_back();
    if (accepting(a, p) != accepting(b, q)) return false;
    if (p == kNoState && q == kNoState) continue;
    for (std::size_t r = 0; r < sigma; ++r) {
      const StateId np = p == kNoState ? kNoState : a.next(p, r);
      const StateId nq = q == kNoState ? kNoState : b.next(q, r);
      const auto code = encode(np, nq);
      if (!seen[code]) {
        seen[code] = 1;
        stack.emplace_back(np, nq);
      }
    }
  }
  return true;
}

std::vector<Prefix> enumerate_prefixes(const Dfa& dfa, std::size_t max_len) {
  std::vector<Prefix> out{{Word{}, dfa.initial()}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t r = 0; r < dfa.symbol_count(); ++r) {
        const StateId t = dfa.next(out[i].state, r);
        if (t == kNoState) continue;
        Word w = out[i].word;
        w.push_back(dfa.alphabet().symbol(r));
        out.push_back({std::move(w), t});
      }
    }
    if (out.size() == level_end) break;
    level_begin = level_end;
  }
  const Alphabet& alphabet = dfa.alphabet();
  std::sort(out.begin(), out.end(), [&](const Prefix& x, const Prefix& y) {
    return colex_less(x.word, y.word, alphabet);
  });
  return out;
}

}  // namespace colexwidth
