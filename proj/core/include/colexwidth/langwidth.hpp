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

// Deterministic width of a regular language.
//
// width(L) >= k holds iff the minimum DFA has k distinct states u_1..u_k,
// words mu_j reaching u_j and a word gamma labelling a cycle at every u_j,
// such that either every mu_j is co-lex below gamma or gamma is below every
// mu_j, with |mu_j| < |gamma| <= bound_n(|Q|, k). The search runs a dynamic
// program over path labels: extremal labels of paths from the initial state
// (one table per direction) and extremal common cycle labels per start tuple.
// Labels are never stored as strings; each DP cell keeps its predecessor and
// last symbol, and cells of one level are kept in co-lex order so that ranks
// propagate by position.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "colexwidth/automaton.hpp"

namespace colexwidth {

enum class Direction { MusBelowGamma, GammaBelowMus };
enum class Extremum { Smallest, Largest };

const char* to_string(Direction direction) noexcept;
std::optional<Direction> parse_direction(std::string_view text) noexcept;

// 2k - 3 + q^k + sum_{t=1}^{2k-1} q^t: the longest gamma (in characters) that
// an exact query for width >= k has to consider. Throws OverflowError carrying
// the last representable partial sum.
std::uint64_t bound_n(std::uint64_t q_count, std::uint64_t k);

// Length bound for one query. `limit()` is the largest gamma length explored.
struct DpBounds {
  std::optional<std::uint64_t> n_exact;  // nullopt when the formula overflows
  std::optional<std::uint64_t> cap;

  static DpBounds exact(std::uint64_t q_count, std::uint64_t k);
  static DpBounds capped(std::uint64_t q_count, std::uint64_t k, std::uint64_t cap);

  std::uint64_t limit() const;
  bool is_exact() const noexcept {
    return n_exact.has_value() && (!cap || *cap >= *n_exact);
  }
};

struct WitnessCertificate {
  std::vector<StateId> states;
  std::vector<Word> mus;
  Word gamma;
  Direction direction = Direction::MusBelowGamma;

  std::size_t k() const noexcept { return states.size(); }
  bool operator==(const WitnessCertificate&) const = default;
};

struct VerificationResult {
  bool ok = false;
  std::vector<std::string> reasons;  // empty when ok

  explicit operator bool() const noexcept { return ok; }
};

// Checks the four witness conditions by direct simulation on `dfa`.
VerificationResult verify_certificate(const Dfa& dfa, const WitnessCertificate& cert);

// Extremal labels of paths from the initial state. Path lengths are counted in
// nodes, so level 1 holds only the initial state with the empty label, and a
// label at level l has l - 1 characters.
class ExtremalPathTable {
 public:
  ExtremalPathTable(const Dfa& dfa, Extremum extremum);
  ExtremalPathTable(const Dfa& dfa, std::size_t max_nodes, Extremum extremum);
  // The table keeps a pointer to the automaton.
  ExtremalPathTable(Dfa&&, Extremum) = delete;
  ExtremalPathTable(Dfa&&, std::size_t, Extremum) = delete;

  // Grows the table so that levels 1..nodes are available.
  void extend_to(std::size_t nodes);

  Extremum extremum() const noexcept { return extremum_; }
  std::size_t levels() const noexcept { return levels_; }
  std::size_t state_count() const noexcept { return n_; }

  bool defined(StateId u, std::size_t nodes) const;
  // Predecessor of u on the extremal path (kNoState at level 1 or if undefined).
  StateId predecessor(StateId u, std::size_t nodes) const;
  std::size_t last_symbol(StateId u, std::size_t nodes) const;
  // Ascending co-lex rank of the label among the defined entries of the level.
  std::size_t rank(StateId u, std::size_t nodes) const;
  Word label(StateId u, std::size_t nodes) const;
  std::size_t cell_count() const noexcept { return cells_; }

 private:
  std::size_t slot(StateId u, std::size_t nodes) const {
    return (nodes - 1) * n_ + u;
  }

  const Dfa* dfa_;
  std::size_t n_;
  Extremum extremum_;
  std::size_t levels_ = 0;
  std::size_t stored_levels_ = 0;  // levels past this one are all undefined
  std::vector<StateId> frontier_;  // last level, extremal label first
  std::vector<StateId> pred_;
  std::vector<std::uint8_t> symbol_;
  std::vector<std::uint32_t> rank_;
  std::size_t cells_ = 0;
};

// Extremal common labels of k parallel paths leaving a fixed start tuple.
// Only product tuples that are reachable from the start tuple and can return
// to it are tracked; each level is grown by extend().
class CycleTable {
 public:
  CycleTable(const Dfa& dfa, std::span<const StateId> start, Extremum extremum);
  CycleTable(Dfa&&, std::span<const StateId>, Extremum) = delete;

  Extremum extremum() const noexcept { return extremum_; }
  // False when no nonempty word labels a cycle at every start state.
  bool has_cycles() const noexcept { return on_cycle_; }
  std::size_t tracked_tuples() const noexcept { return tuples_.size(); }

  // Adds level levels()+1. Returns false once no cell is live.
  bool extend();
  std::size_t levels() const noexcept { return levels_.size(); }
  bool cycle_at(std::size_t nodes) const;
  std::optional<Word> cycle_label(std::size_t nodes) const;
  std::size_t cell_count() const noexcept { return cells_; }

  // Cell access for backward label walks. A cell is addressed by its level
  // (node count) and its index within the level.
  std::uint32_t start_cell(std::size_t nodes) const { return start_cell_[nodes - 1]; }
  std::size_t cell_symbol(std::size_t nodes, std::uint32_t cell) const {
    return levels_[nodes - 1][cell].symbol;
  }
  std::uint32_t cell_predecessor(std::size_t nodes, std::uint32_t cell) const {
    return levels_[nodes - 1][cell].pred;
  }

 private:
  struct Cell {
    std::uint32_t tuple;
    std::uint32_t pred;
    std::uint8_t symbol;
  };

  const Dfa* dfa_;
  Extremum extremum_;
  bool on_cycle_ = false;
  std::vector<std::vector<StateId>> tuples_;  // product ids -> states
  std::vector<std::uint32_t> succ_;           // id * sigma + rank
  std::vector<std::vector<Cell>> levels_;     // levels_[nodes - 1]
  std::vector<std::uint32_t> start_cell_;     // per level, or npos
  std::vector<std::uint64_t> stamp_;
  std::size_t cells_ = 0;
};

// Diagnostic counters of one query.
struct DpStats {
  std::uint64_t bound = 0;  // exact gamma-length bound, 0 when it overflowed
  std::uint64_t limit = 0;  // gamma-length bound actually explored
  std::uint64_t tuples_total = 0;
  std::uint64_t tuples_pruned_acyclic_state = 0;
  std::uint64_t tuples_pruned_no_common_cycle = 0;
  std::uint64_t tuples_explored = 0;
  std::uint64_t path_cells = 0;
  std::uint64_t cycle_cells = 0;
  std::uint64_t max_level = 0;
};

struct WidthQuery {
  std::size_t k = 0;
  std::optional<WitnessCertificate> certificate;
  // True when the answer is definitive: a certificate, or a refutation that
  // explored the full bound.
  bool exact = false;
  DpStats stats;
};

struct SearchResult {
  WidthQuery query;
  Dfa automaton;  // the minimum DFA the certificate's state ids refer to
};

// Decides width(L) >= k. The input is minimised when it is not already a
// minimum DFA; the returned automaton is the one the certificate refers to.
SearchResult width_at_least(const Dfa& dfa, std::size_t k, const DpBounds& bounds);

// Searches a witness for exactly these states of a minimum DFA.
WidthQuery entangled_tuple(const Dfa& min_dfa, std::span<const StateId> states,
                           const DpBounds& bounds);

struct LanguageWidth {
  std::size_t width = 1;
  std::optional<WitnessCertificate> certificate;  // for k = width >= 2
  bool exact = true;
  std::size_t upper_bound = 1;  // width of the minimum DFA
  Dfa automaton;
  std::vector<WidthQuery> queries;
};

// width(L) by exponential then binary search on k, capped above by the width
// of the minimum DFA. `cap` bounds the gamma length of every query; `max_k`
// stops the search early. Either may make the answer a lower bound only.
LanguageWidth width_lang(const Dfa& dfa, std::optional<std::uint64_t> cap = std::nullopt,
                         std::optional<std::size_t> max_k = std::nullopt);

// States lying on at least one cycle.
std::vector<StateId> cyclic_states(const Dfa& dfa);

}  // namespace colexwidth
