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

#pragma once

// Deterministic finite automata over a totally ordered alphabet.
//
// Transition functions are partial: a missing edge means the word leaves
// Pref(L). Analyses assume trim automata (every state reachable from the
// initial state and co-reachable to a final state) and reject anything else
// through require_trim(); trimming is always an explicit call.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace colexwidth {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = static_cast<StateId>(-1);

// Words are plain character strings over an Alphabet.
using Word = std::string;

// An ordered set of single-character symbols. Declaration order is the total
// order on characters used by every co-lexicographic comparison.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::string_view symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  char symbol(std::size_t rank) const { return symbols_.at(rank); }
  const std::string& symbols() const noexcept { return symbols_; }

  bool contains(char c) const noexcept { return rank_[index(c)] >= 0; }
  // Throws InputError for characters outside the alphabet.
  std::size_t rank(char c) const;

  bool operator==(const Alphabet& other) const noexcept {
    return symbols_ == other.symbols_;
  }

 private:
  static std::size_t index(char c) noexcept {
    return static_cast<unsigned char>(c);
  }

  std::string symbols_;
  std::array<std::int16_t, 256> rank_;
};

class Dfa {
 public:
  Dfa(Alphabet alphabet, std::size_t state_count, StateId initial = 0);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return state_count_; }
  std::size_t symbol_count() const noexcept { return alphabet_.size(); }

  StateId initial() const noexcept { return initial_; }
  void set_initial(StateId q);

  bool is_final(StateId q) const { return final_.at(q) != 0; }
  void set_final(StateId q, bool accepting = true);
  std::vector<StateId> finals() const;

  // Target of the edge leaving `q` with the symbol of rank `rank`, or
  // kNoState.
  StateId next(StateId q, std::size_t rank) const {
    return delta_[static_cast<std::size_t>(q) * alphabet_.size() + rank];
  }
  StateId next_on(StateId q, char c) const { return next(q, alphabet_.rank(c)); }

  // Throws InputError when an edge (q, c) with a different target exists.
  void add_transition(StateId from, char c, StateId to);
  std::size_t transition_count() const noexcept;

  // State reached by reading `word` from `from`; nullopt once an edge is
  // missing. Characters outside the alphabet raise InputError.
  std::optional<StateId> walk(StateId from, std::string_view word) const;
  std::optional<StateId> run(std::string_view word) const {
    return walk(initial_, word);
  }
  bool accepts(std::string_view word) const;

  bool operator==(const Dfa& other) const = default;

 private:
  void check_state(StateId q) const;

  Alphabet alphabet_;
  std::size_t state_count_;
  StateId initial_;
  std::vector<std::uint8_t> final_;
  std::vector<StateId> delta_;
};

// Reachability/co-reachability diagnostics.
struct TrimReport {
  std::vector<StateId> unreachable;
  std::vector<StateId> not_coreachable;
  bool empty_language = false;

  bool ok() const noexcept {
    return unreachable.empty() && not_coreachable.empty() && !empty_language;
  }
  std::string describe() const;
};

TrimReport validate_trim(const Dfa& dfa);

// Throws EmptyLanguageError or NotTrimError with the offending states.
void require_trim(const Dfa& dfa);

// Drops unreachable and dead states, keeping the relative order of the
// survivors. Throws EmptyLanguageError when nothing is accepted.
Dfa trim(const Dfa& dfa);

// Co-lexicographic comparison: compares the reversed words lexicographically,
// so a proper suffix precedes the longer word and the empty word is minimum.
std::strong_ordering colex_compare(std::string_view a, std::string_view b,
                                   const Alphabet& alphabet);

inline bool colex_less(std::string_view a, std::string_view b,
                       const Alphabet& alphabet) {
  return colex_compare(a, b, alphabet) == std::strong_ordering::less;
}

// Partition of the state set. Class ids are dense and numbered in order of
// first appearance by state id.
struct StatePartition {
  std::vector<std::uint32_t> class_of;
  std::size_t class_count = 0;

  std::vector<std::vector<StateId>> blocks() const;
  bool operator==(const StatePartition& other) const = default;

  static StatePartition identity(std::size_t n);
  // Renumbers arbitrary labels into first-appearance order.
  static StatePartition from_labels(std::span<const std::uint64_t> labels);
};

StatePartition nerode_classes(const Dfa& dfa);
bool is_minimal(const Dfa& dfa);

// Quotient by a right-invariant partition. Transitions are inherited; a
// class whose members disagree on any successor class raises InvariantError.
Dfa quotient(const Dfa& dfa, const StatePartition& partition);

// Breadth-first order from the initial state, edges explored in alphabet
// order: result[old_id] = new_id.
std::vector<StateId> bfs_numbering(const Dfa& dfa);
Dfa renumber(const Dfa& dfa, std::span<const StateId> new_id);
Dfa canonical(const Dfa& dfa);

// Nerode quotient in canonical numbering.
Dfa minimize(const Dfa& dfa);

// Throws InputError if the alphabets differ.
bool language_equivalent(const Dfa& a, const Dfa& b);

struct Prefix {
  Word word;
  StateId state;
  bool operator==(const Prefix&) const = default;
};

// Every word of Pref(L) up to `max_len` characters with its arrival state,
// sorted co-lexicographically.
std::vector<Prefix> enumerate_prefixes(const Dfa& dfa, std::size_t max_len);

}  // namespace colexwidth
