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

// Minimum P-sortable DFAs.
//
// A chain assignment fixes a partition P of Pref(L): every prefix belongs to
// the chain of its arrival state. The minimum P-sortable DFA is the quotient
// by the coarsest state partition that refines the Nerode classes and is
// P-consistent (classes stay inside one chain), P-convex (classes are runs of
// consecutive states of their chain) and right-invariant.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "colexwidth/automaton.hpp"
#include "colexwidth/colex.hpp"

namespace colexwidth {

// chain_of[q] in 0..p-1; every chain nonempty.
using ChainAssignment = ChainPartition;

// State-level candidate for the P-refined Nerode equivalence.
using StateEquivalence = StatePartition;

// Throws InputError for malformed assignments.
bool is_p_sortable(const Dfa& dfa, const ChainAssignment& assignment);

// First in-chain pair of incomparable states, if any.
std::optional<StatePair> incomparable_in_chain(const StateOrder& order,
                                               const ChainAssignment& assignment);

StateEquivalence cs_split(const StateEquivalence& eq, const ChainAssignment& assignment);

// Splits every class into maximal runs of chain-consecutive states. Throws
// InvariantError when a chain is not totally ordered or `eq` is not
// P-consistent.
StateEquivalence cv_split(const StateEquivalence& eq, const ChainAssignment& assignment,
                          const StateOrder& order);

// Coarsest right-invariant refinement. Throws InvariantError when members of
// a class disagree on whether an edge exists.
StateEquivalence r_split(const StateEquivalence& eq, const Dfa& dfa);

bool is_p_consistent(const StateEquivalence& eq, const ChainAssignment& assignment);
bool is_p_convex(const StateEquivalence& eq, const ChainAssignment& assignment,
                 const StateOrder& order);
bool is_right_invariant(const StateEquivalence& eq, const Dfa& dfa);
// Every class lies inside one Nerode class.
bool refines(const StateEquivalence& finer, const StateEquivalence& coarser);

// Nerode classes, then cs_split, then r_split / cv_split until stable.
StateEquivalence p_nerode_equivalence(const Dfa& dfa, const ChainAssignment& assignment);

struct PSortableMinimum {
  Dfa dfa;
  ChainAssignment chains;
};

// Quotient by p_nerode_equivalence in canonical numbering, with the chain
// assignment carried over. Throws InputError naming an incomparable in-chain
// pair when the assignment is not a chain partition.
PSortableMinimum minimize_p_sortable(const Dfa& dfa, const ChainAssignment& assignment);

}  // namespace colexwidth
