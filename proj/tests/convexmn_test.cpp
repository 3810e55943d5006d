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

#include <gtest/gtest.h>

#include "colexwidth/colex.hpp"
#include "colexwidth/convexmn.hpp"
#include "colexwidth/error.hpp"
#include "test_util.hpp"

namespace colexwidth {
namespace {

using testing::fixture;

StateEquivalence eq_of(std::vector<std::uint64_t> labels) {
  return StatePartition::from_labels(labels);
}

const ChainAssignment kA2Chains = ChainPartition::from_blocks(7, {{0, 1, 4}, {2, 3, 5, 6}});
const ChainAssignment kA3Chains = ChainPartition::from_blocks(7, {{0, 1, 3}, {2, 4, 5, 6}});

TEST(PSortable, Examples) {
  EXPECT_TRUE(is_p_sortable(fixture("a2.dfa"), kA2Chains));
  EXPECT_TRUE(is_p_sortable(fixture("a3.dfa"), kA3Chains));
  EXPECT_FALSE(
      is_p_sortable(fixture("a1.dfa"), ChainPartition::from_blocks(6, {{0, 1, 2}, {3, 4, 5}})));
}

TEST(PSortable, NamesTheIncomparablePair) {
  const auto bad = incomparable_in_chain(state_order(fixture("a1.dfa")),
                                         ChainPartition::from_blocks(6, {{0, 1, 2}, {3, 4, 5}}));
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(*bad, (StatePair{1, 2}));
}

TEST(CsSplit, SplitsByChain) {
  const ChainAssignment chains = ChainPartition::from_blocks(3, {{0, 1}, {2}});
  EXPECT_EQ(cs_split(eq_of({0, 1, 1}), chains).blocks(),
            (std::vector<std::vector<StateId>>{{0}, {1}, {2}}));
  EXPECT_EQ(cs_split(eq_of({0, 0, 1}), chains), eq_of({0, 0, 1}));
}

TEST(CsSplit, A2NerodeClassesSplitApartTheCopies) {
  const Dfa a2 = fixture("a2.dfa");
  const StateEquivalence nerode = nerode_classes(a2);
  EXPECT_EQ(nerode.class_count, 6u);
  EXPECT_EQ(nerode.class_of[3], nerode.class_of[6]);
  const StateEquivalence split = cs_split(nerode, kA2Chains);
  // 3 and 6 share a chain, so the chain split keeps them together.
  EXPECT_EQ(split.class_of[3], split.class_of[6]);
  EXPECT_TRUE(is_p_consistent(split, kA2Chains));
  EXPECT_TRUE(refines(split, nerode));
}

TEST(CvSplit, GapInChain) {
  StateOrder order(3);
  order.strictly_below.set(0, 1);
  order.strictly_below.set(1, 2);
  order.strictly_below.set(0, 2);
  const ChainAssignment one = ChainPartition::from_blocks(3, {{0, 1, 2}});
  EXPECT_EQ(cv_split(eq_of({0, 1, 0}), one, order).class_count, 3u);
  EXPECT_EQ(cv_split(eq_of({0, 0, 1}), one, order), eq_of({0, 0, 1}));
  EXPECT_FALSE(is_p_convex(eq_of({0, 1, 0}), one, order));
  EXPECT_TRUE(is_p_convex(eq_of({0, 0, 1}), one, order));
}

TEST(CvSplit, AcStarTailIsConsecutive) {
  const Dfa acstar = fixture("acstar.dfa");
  const ChainAssignment one = ChainPartition::from_blocks(3, {{0, 1, 2}});
  const StateEquivalence eq = eq_of({0, 1, 1});
  EXPECT_EQ(cv_split(eq, one, state_order(acstar)), eq);
}

TEST(CvSplit, RejectsInconsistentOrUnorderedInput) {
  const StateOrder a1 = state_order(fixture("a1.dfa"));
  const ChainAssignment bad = ChainPartition::from_blocks(6, {{0, 1, 2}, {3, 4, 5}});
  EXPECT_THROW(cv_split(StatePartition::identity(6), bad, a1), InvariantError);
  const ChainAssignment good = ChainPartition::from_blocks(6, {{0, 1, 3}, {2, 4}, {5}});
  EXPECT_THROW(cv_split(eq_of({0, 0, 1, 1, 2, 2}), good, a1), InvariantError);
}

TEST(RSplit, Examples) {
  const Dfa acstar = fixture("acstar.dfa");
  EXPECT_EQ(r_split(eq_of({0, 1, 1}), acstar), eq_of({0, 1, 1}));
  EXPECT_TRUE(is_right_invariant(eq_of({0, 1, 1}), acstar));
  const Dfa a1 = fixture("a1.dfa");
  EXPECT_EQ(r_split(StatePartition::identity(6), a1), StatePartition::identity(6));
  // 4 and 5 both reach 3, but on different letters.
  const StateEquivalence merged = eq_of({0, 1, 2, 3, 4, 4});
  EXPECT_THROW(r_split(merged, a1), InvariantError);
}

TEST(RSplit, SplitsOnSuccessorClasses) {
  Dfa dfa(Alphabet("a"), 4);
  dfa.add_transition(0, 'a', 2);
  dfa.add_transition(1, 'a', 3);
  for (StateId q = 0; q < 4; ++q) dfa.set_final(q);
  EXPECT_EQ(r_split(eq_of({0, 0, 1, 2}), dfa).class_count, 4u);
  EXPECT_EQ(r_split(eq_of({0, 0, 1, 1}), dfa), eq_of({0, 0, 1, 1}));
  EXPECT_FALSE(is_right_invariant(eq_of({0, 0, 1, 2}), dfa));
}

TEST(Refines, Basics) {
  EXPECT_TRUE(refines(StatePartition::identity(3), eq_of({0, 0, 0})));
  EXPECT_TRUE(refines(eq_of({0, 0, 1}), eq_of({0, 0, 0})));
  EXPECT_FALSE(refines(eq_of({0, 0, 0}), eq_of({0, 0, 1})));
}

TEST(MinimizePSortable, AcStarSingleChain) {
  const Dfa acstar = fixture("acstar.dfa");
  const PSortableMinimum m =
      minimize_p_sortable(acstar, ChainPartition::from_blocks(3, {{0, 1, 2}}));
  EXPECT_EQ(m.dfa.state_count(), 2u);
  EXPECT_EQ(m.chains.chain_count, 1u);
  EXPECT_EQ(m.dfa, minimize(acstar));
  EXPECT_TRUE(language_equivalent(m.dfa, acstar));
}

TEST(MinimizePSortable, A2AndA3KeepSevenStates) {
  for (const auto& [name, chains] :
       {std::pair{"a2.dfa", kA2Chains}, std::pair{"a3.dfa", kA3Chains}}) {
    const Dfa dfa = fixture(name);
    const PSortableMinimum m = minimize_p_sortable(dfa, chains);
    EXPECT_EQ(m.dfa.state_count(), 7u) << name;
    EXPECT_TRUE(language_equivalent(m.dfa, dfa)) << name;
    EXPECT_TRUE(is_p_sortable(m.dfa, m.chains)) << name;
    EXPECT_EQ(m.chains.chain_count, 2u) << name;
    const PSortableMinimum again = minimize_p_sortable(m.dfa, m.chains);
    EXPECT_EQ(again.dfa, m.dfa) << name;
    EXPECT_EQ(again.chains, m.chains) << name;
  }
}

TEST(MinimizePSortable, A1WithItsOwnChainsStaysPut) {
  const Dfa a1 = fixture("a1.dfa");
  const auto chains = width_dfa(state_order(a1)).chains;
  const PSortableMinimum m = minimize_p_sortable(a1, chains);
  EXPECT_EQ(m.dfa.state_count(), 6u);
}

TEST(MinimizePSortable, ChainsOverCopiesCanMerge) {
  // A2 with one chain holding 3 and its copy 6 next to each other.
  const Dfa a2 = fixture("a2.dfa");
  const auto order = state_order(a2);
  const ChainAssignment chains = ChainPartition::from_blocks(7, {{0, 1, 3, 6}, {2, 4}, {5}});
  ASSERT_TRUE(is_p_sortable(a2, chains));
  ASSERT_TRUE(order.less(3, 6) || order.less(6, 3));
  const PSortableMinimum m = minimize_p_sortable(a2, chains);
  EXPECT_EQ(m.dfa.state_count(), 6u);
  EXPECT_TRUE(language_equivalent(m.dfa, a2));
  EXPECT_TRUE(is_p_sortable(m.dfa, m.chains));
}

TEST(MinimizePSortable, RejectsIncomparableChain) {
  try {
    minimize_p_sortable(fixture("a1.dfa"), ChainPartition::from_blocks(6, {{0, 1, 2}, {3, 4, 5}}));
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("1"), std::string::npos);
  }
}

TEST(PNerodeEquivalence, IsAFixpointOfAllThreeSplits) {
  const Dfa a3 = fixture("a3.dfa");
  const StateEquivalence eq = p_nerode_equivalence(a3, kA3Chains);
  const StateOrder order = state_order(a3);
  EXPECT_TRUE(is_p_consistent(eq, kA3Chains));
  EXPECT_TRUE(is_p_convex(eq, kA3Chains, order));
  EXPECT_TRUE(is_right_invariant(eq, a3));
  EXPECT_TRUE(refines(eq, nerode_classes(a3)));
}

}  // namespace
}  // namespace colexwidth
