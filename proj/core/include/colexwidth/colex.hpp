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

// The co-lexicographic partial order on the states of a DFA, its width, and
// Dilworth witnesses (maximum antichain, minimum chain partition).
//
// For states u, v write I_u for the words reaching u. Then u < v holds iff
// every word of I_u is co-lex smaller than every word of I_v. It is computed
// through the complementary existential relation: leq_exists(u, v) holds iff
// some alpha in I_u and beta in I_v satisfy alpha <= beta.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "colexwidth/automaton.hpp"

namespace colexwidth {

// Dense square boolean matrix.
class RelationMatrix {
 public:
  RelationMatrix() = default;
  explicit RelationMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool operator()(std::size_t i, std::size_t j) const {
    return cells_[i * n_ + j] != 0;
  }
  void set(std::size_t i, std::size_t j, bool value = true) {
    cells_[i * n_ + j] = value ? 1 : 0;
  }
  bool operator==(const RelationMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> cells_;
};

using StatePair = std::pair<StateId, StateId>;

struct ColexRelation {
  RelationMatrix leq_exists;
};

struct StateOrder {
  RelationMatrix strictly_below;

  StateOrder() = default;
  explicit StateOrder(std::size_t n) : strictly_below(n) {}

  std::size_t size() const noexcept { return strictly_below.size(); }
  bool less(StateId u, StateId v) const { return strictly_below(u, v); }
  bool comparable(StateId u, StateId v) const {
    return u == v || less(u, v) || less(v, u);
  }
  // Strict pairs in row-major order.
  std::vector<StatePair> pairs() const;
  bool operator==(const StateOrder&) const = default;

  static StateOrder from_pairs(std::size_t n, const std::vector<StatePair>& pairs);
};

// Irreflexive, antisymmetric and transitive.
bool is_strict_partial_order(const StateOrder& order);

// A partition of the states into chains. chain_of[q] is the chain of q.
struct ChainPartition {
  std::vector<std::uint32_t> chain_of;
  std::size_t chain_count = 0;

  // Blocks with members by ascending state id.
  std::vector<std::vector<StateId>> chains() const;
  bool operator==(const ChainPartition&) const = default;

  static ChainPartition from_blocks(std::size_t n,
                                    const std::vector<std::vector<StateId>>& blocks);
};

struct Antichain {
  std::vector<StateId> states;  // ascending
};

struct DfaWidth {
  std::size_t width = 0;
  Antichain antichain;
  ChainPartition chains;
};

// Least fixpoint of the existential co-lex relation on a trim DFA.
ColexRelation existential_leq(const Dfa& dfa);

StateOrder state_order(const ColexRelation& relation);
StateOrder state_order(const Dfa& dfa);

// Dilworth width with both witnesses. Chains are numbered by the id of their
// least element; ties in the matching go to the lowest state id.
DfaWidth width_dfa(const StateOrder& order);

// Throws InputError when `partition` is not a partition of the order's states.
bool is_chain_partition(const StateOrder& order, const ChainPartition& partition);

bool is_antichain(const StateOrder& order, const Antichain& antichain);

// Covering pairs of the order (its transitive reduction).
std::vector<StatePair> hasse_cover_edges(const StateOrder& order);

// The members of the given states sorted by the order. Throws InvariantError
// if two of them are incomparable.
std::vector<StateId> sort_chain(const StateOrder& order, std::vector<StateId> chain);

}  // namespace colexwidth
