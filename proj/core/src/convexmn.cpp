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

#include "colexwidth/convexmn.hpp"

#include <map>

#include "colexwidth/error.hpp"

namespace colexwidth {

namespace {

void check_cover(const StateEquivalence& eq, std::size_t n) {
  if (eq.class_of.size() != n) {
    throw InputError("equivalence covers " + std::to_string(eq.class_of.size()) +
                     " states, expected " + std::to_string(n));
  }
}

}  // namespace

std::optional<StatePair> incomparable_in_chain(const StateOrder& order,
                                               const ChainAssignment& assignment) {
  const std::size_t n = order.size();
  for (StateId u = 0; u < n; ++u) {
    for (StateId v = u + 1; v < n; ++v) {
      if (assignment.chain_of[u] == assignment.chain_of[v] && !order.comparable(u, v)) {
        return StatePair{u, v};
      }
    }
  }
  return std::nullopt;
}

bool is_p_sortable(const Dfa& dfa, const ChainAssignment& assignment) {
  return is_chain_partition(state_order(dfa), assignment);
}

StateEquivalence cs_split(const StateEquivalence& eq, const ChainAssignment& assignment) {
  check_cover(eq, assignment.chain_of.size());
  std::vector<std::uint64_t> labels(eq.class_of.size());
  for (std::size_t q = 0; q < labels.size(); ++q) {
    labels[q] = static_cast<std::uint64_t>(eq.class_of[q]) * assignment.chain_count +
                assignment.chain_of[q];
  }
  return StatePartition::from_labels(labels);
}

bool is_p_consistent(const StateEquivalence& eq, const ChainAssignment& assignment) {
  check_cover(eq, assignment.chain_of.size());
  std::vector<std::uint32_t> chain(eq.class_count, static_cast<std::uint32_t>(-1));
  for (std::size_t q = 0; q < eq.class_of.size(); ++q) {
    auto& c = chain[eq.class_of[q]];
    if (c == static_cast<std::uint32_t>(-1)) c = assignment.chain_of[q];
    if (c != assignment.chain_of[q]) return false;
  }
  return true;
}

StateEquivalence cv_split(const StateEquivalence& eq, const ChainAssignment& assignment,
                          const StateOrder& order) {
  check_cover(eq, assignment.chain_of.size());
  if (!is_p_consistent(eq, assignment)) {
    throw InvariantError("cv_split needs a P-consistent equivalence");
  }
  std::vector<std::uint64_t> labels(eq.class_of.size());
  std::uint64_t run = 0;
  for (auto chain : assignment.chains()) {
    chain = sort_chain(order, std::move(chain));
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (i > 0 && eq.class_of[chain[i]] != eq.class_of[chain[i - 1]]) ++run;
      labels[chain[i]] = run;
    }
    ++run;
  }
  return StatePartition::from_labels(labels);
}

bool is_p_convex(const StateEquivalence& eq, const ChainAssignment& assignment,
                 const StateOrder& order) {
  return is_p_consistent(eq, assignment) &&
         cv_split(eq, assignment, order).class_count == eq.class_count;
}

StateEquivalence r_split(const StateEquivalence& eq, const Dfa& dfa) {
  const std::size_t n = dfa.state_count();
  const std::size_t sigma = dfa.symbol_count();
  check_cover(eq, n);

  std::vector<StateId> representative(eq.class_count, kNoState);
  for (StateId q = 0; q < n; ++q) {
    StateId& rep = representative[eq.class_of[q]];
    if (rep == kNoState) {
      rep = q;
      continue;
    }
    for (std::size_t r = 0; r < sigma; ++r) {
      if ((dfa.next(rep, r) == kNoState) != (dfa.next(q, r) == kNoState)) {
        throw InvariantError("states " + std::to_string(rep) + " and " +
                             std::to_string(q) + " share a class but disagree on '" +
                             std::string(1, dfa.alphabet().symbol(r)) + "'");
      }
    }
  }

  StatePartition current = eq;
  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint64_t> ids;
    std::vector<std::uint64_t> labels(n);
    for (StateId q = 0; q < n; ++q) {
      std::vector<std::uint32_t> sig{current.class_of[q]};
      for (std::size_t r = 0; r < sigma; ++r) {
        const StateId t = dfa.next(q, r);
        sig.push_back(t == kNoState ? static_cast<std::uint32_t>(-1) : current.class_of[t]);
      }
      labels[q] = ids.try_emplace(std::move(sig), ids.size()).first->second;
    }
    StatePartition next = StatePartition::from_labels(labels);
    if (next.class_count == current.class_count) return next;
    current = std::move(next);
  }
}

bool is_right_invariant(const StateEquivalence& eq, const Dfa& dfa) {
  const std::size_t sigma = dfa.symbol_count();
  std::vector<StateId> rep(eq.class_count, kNoState);
  for (StateId q = 0; q < dfa.state_count(); ++q) {
    StateId& p = rep[eq.class_of[q]];
    if (p == kNoState) {
      p = q;
      continue;
    }
    for (std::size_t r = 0; r < sigma; ++r) {
      const StateId a = dfa.next(p, r);
      const StateId b = dfa.next(q, r);
      if ((a == kNoState) != (b == kNoState)) return false;
      if (a != kNoState && eq.class_of[a] != eq.class_of[b]) return false;
    }
  }
  return true;
}

bool refines(const StateEquivalence& finer, const StateEquivalence& coarser) {
  if (finer.class_of.size() != coarser.class_of.size()) return false;
  std::vector<std::uint32_t> image(finer.class_count, static_cast<std::uint32_t>(-1));
  for (std::size_t q = 0; q < finer.class_of.size(); ++q) {
    auto& c = image[finer.class_of[q]];
    if (c == static_cast<std::uint32_t>(-1)) c = coarser.class_of[q];
    if (c != coarser.class_of[q]) return false;
  }
  return true;
}

namespace {

StateOrder checked_order(const Dfa& dfa, const ChainAssignment& assignment) {
  StateOrder order = state_order(dfa);
  is_chain_partition(order, assignment);  // throws on malformed input
  if (const auto pair = incomparable_in_chain(order, assignment)) {
    throw InputError("not P-sortable: states " + std::to_string(pair->first) + " and " +
                     std::to_string(pair->second) +
                     " share a chain but are co-lex incomparable");
  }
  return order;
}

}  // namespace

StateEquivalence p_nerode_equivalence(const Dfa& dfa, const ChainAssignment& assignment) {
  const StateOrder order = checked_order(dfa, assignment);
  StateEquivalence eq = cs_split(nerode_classes(dfa), assignment);
  for (;;) {
    StateEquivalence next = cv_split(r_split(eq, dfa), assignment, order);
    if (next == eq) return eq;
    eq = std::move(next);
  }
}

PSortableMinimum minimize_p_sortable(const Dfa& dfa, const ChainAssignment& assignment) {
  const StateEquivalence eq = p_nerode_equivalence(dfa, assignment);
  const Dfa merged = quotient(dfa, eq);

  std::vector<std::uint32_t> chain_of(eq.class_count);
  for (StateId q = 0; q < dfa.state_count(); ++q) {
    chain_of[eq.class_of[q]] = assignment.chain_of[q];
  }
  const std::vector<StateId> new_id = bfs_numbering(merged);
  ChainAssignment chains;
  chains.chain_count = assignment.chain_count;
  chains.chain_of.resize(eq.class_count);
  for (StateId c = 0; c < eq.class_count; ++c) chains.chain_of[new_id[c]] = chain_of[c];
  return PSortableMinimum{renumber(merged, new_id), std::move(chains)};
}

}  // namespace colexwidth
