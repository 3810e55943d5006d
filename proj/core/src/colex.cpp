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

#include "colexwidth/colex.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "colexwidth/error.hpp"

namespace colexwidth {

std::vector<StatePair> StateOrder::pairs() const {
  std::vector<StatePair> out;
  for (StateId u = 0; u < size(); ++u) {
    for (StateId v = 0; v < size(); ++v) {
      if (less(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

StateOrder StateOrder::from_pairs(std::size_t n, const std::vector<StatePair>& pairs) {
  StateOrder order(n);
  for (const auto& [u, v] : pairs) {
    if (u >= n || v >= n) throw InputError("order pair out of range");
    order.strictly_below.set(u, v);
  }
  return order;
}

bool is_strict_partial_order(const StateOrder& order) {
  const std::size_t n = order.size();
  for (StateId u = 0; u < n; ++u) {
    if (order.less(u, u)) return false;
    for (StateId v = 0; v < n; ++v) {
      if (!order.less(u, v)) continue;
      if (order.less(v, u)) return false;
      for (StateId w = 0; w < n; ++w) {
        if (order.less(v, w) && !order.less(u, w)) return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<StateId>> ChainPartition::chains() const {
  std::vector<std::vector<StateId>> out(chain_count);
  for (StateId q = 0; q < chain_of.size(); ++q) out[chain_of[q]].push_back(q);
  return out;
}

ChainPartition ChainPartition::from_blocks(
    std::size_t n, const std::vector<std::vector<StateId>>& blocks) {
  ChainPartition p;
  p.chain_of.assign(n, std::numeric_limits<std::uint32_t>::max());
  p.chain_count = blocks.size();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InputError("chain partition has an empty chain");
    for (StateId q : blocks[b]) {
      if (q >= n) {
        throw InputError("chain partition names state " + std::to_string(q) +
                         " but the automaton has " + std::to_string(n) +
                         " states");
      }
      if (p.chain_of[q] != std::numeric_limits<std::uint32_t>::max()) {
        throw InputError("state " + std::to_string(q) +
                         " appears in more than one chain");
      }
      p.chain_of[q] = static_cast<std::uint32_t>(b);
    }
  }
  for (StateId q = 0; q < n; ++q) {
    if (p.chain_of[q] == std::numeric_limits<std::uint32_t>::max()) {
      throw InputError("state " + std::to_string(q) + " is in no chain");
    }
  }
  return p;
}

ColexRelation existential_leq(const Dfa& dfa) {
  require_trim(dfa);
  const std::size_t n = dfa.state_count();
  const std::size_t sigma = dfa.symbol_count();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  // Smallest and largest incoming character rank per state.
  std::vector<std::size_t> min_in(n, kNone);
  std::vector<std::size_t> max_in(n, 0);
  std::vector<std::uint8_t> has_in(n, 0);
  for (StateId q = 0; q < n; ++q) {
    for (std::size_t r = 0; r < sigma; ++r) {
      const StateId t = dfa.next(q, r);
      if (t == kNoState) continue;
      min_in[t] = std::min(min_in[t], r);
      max_in[t] = has_in[t] ? std::max(max_in[t], r) : r;
      has_in[t] = 1;
    }
  }

  RelationMatrix leq(n);
  std::vector<StatePair> worklist;
  const auto add = [&](StateId u, StateId v) {
    if (!leq(u, v)) {
      leq.set(u, v);
      worklist.emplace_back(u, v);
    }
  };
  for (StateId u = 0; u < n; ++u) {
    add(u, u);
    add(dfa.initial(), u);
  }
  // alpha = alpha' a, beta = beta' b with a < b.
  for (StateId u = 0; u < n; ++u) {
    if (!has_in[u]) continue;
    for (StateId v = 0; v < n; ++v) {
      if (has_in[v] && min_in[u] < max_in[v]) add(u, v);
    }
  }
  // alpha' <= beta' extends by a common last character.
  while (!worklist.empty()) {
    const auto [u, v] = worklist.back();
    worklist.pop_back();
    for (std::size_t r = 0; r < sigma; ++r) {
      const StateId tu = dfa.next(u, r);
      const StateId tv = dfa.next(v, r);
      if (tu != kNoState && tv != kNoState) add(tu, tv);
    }
  }
  return ColexRelation{std::move(leq)};
}

StateOrder state_order(const ColexRelation& relation) {
  const std::size_t n = relation.leq_exists.size();
  StateOrder order(n);
  for (StateId u = 0; u < n; ++u) {
    for (StateId v = 0; v < n; ++v) {
      if (u != v && !relation.leq_exists(v, u)) order.strictly_below.set(u, v);
    }
  }
  return order;
}

StateOrder state_order(const Dfa& dfa) { return state_order(existential_leq(dfa)); }

namespace {

constexpr StateId kFree = kNoState;

// Hopcroft-Karp on the split graph (left copy u -> right copy v iff u < v),
// seeded with a greedy matching that scans left vertices and their neighbours
// by ascending id.
class ComparabilityMatching {
 public:
  explicit ComparabilityMatching(const StateOrder& order)
      : n_(order.size()), adj_(n_), match_left_(n_, kFree), match_right_(n_, kFree),
        dist_(n_) {
    for (StateId u = 0; u < n_; ++u) {
      for (StateId v = 0; v < n_; ++v) {
        if (order.less(u, v)) adj_[u].push_back(v);
      }
    }
    for (StateId u = 0; u < n_; ++u) {
      for (StateId v : adj_[u]) {
        if (match_right_[v] == kFree) {
          match_left_[u] = v;
          match_right_[v] = u;
          break;
        }
      }
    }
    while (bfs()) {
      for (StateId u = 0; u < n_; ++u) {
        if (match_left_[u] == kFree) dfs(u);
      }
    }
  }

  std::size_t size() const {
    return static_cast<std::size_t>(std::count_if(
        match_left_.begin(), match_left_.end(), [](StateId v) { return v != kFree; }));
  }
  const std::vector<StateId>& match_left() const { return match_left_; }
  const std::vector<StateId>& match_right() const { return match_right_; }
  const std::vector<std::vector<StateId>>& adjacency() const { return adj_; }

 private:
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    std::queue<StateId> queue;
    bool found = false;
    for (StateId u = 0; u < n_; ++u) {
      if (match_left_[u] == kFree) {
        dist_[u] = 0;
        queue.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    while (!queue.empty()) {
      const StateId u = queue.front();
      queue.pop();
      for (StateId v : adj_[u]) {
        const StateId w = match_right_[v];
        if (w == kFree) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(StateId u) {
    for (StateId v : adj_[u]) {
      const StateId w = match_right_[v];
      if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<StateId>> adj_;
  std::vector<StateId> match_left_;
  std::vector<StateId> match_right_;
  std::vector<std::size_t> dist_;
};

}  // namespace

DfaWidth width_dfa(const StateOrder& order) {
  const std::size_t n = order.size();
  ComparabilityMatching matching(order);
  DfaWidth result;
  result.width = n - matching.size();

  // Chains follow matched edges from each state that is nobody's successor.
  result.chains.chain_of.assign(n, 0);
  for (StateId start = 0; start < n; ++start) {
    if (matching.match_right()[start] != kFree) continue;
    const auto chain = static_cast<std::uint32_t>(result.chains.chain_count++);
    for (StateId q = start; q != kFree; q = matching.match_left()[q]) {
      result.chains.chain_of[q] = chain;
    }
  }

  // Koenig: alternating reachability from free left vertices. The states whose
  // left copy is reached and right copy is not form a maximum antichain.
  std::vector<std::uint8_t> left_seen(n, 0), right_seen(n, 0);
  std::vector<StateId> stack;
  for (StateId u = 0; u < n; ++u) {
    if (matching.match_left()[u] == kFree) {
      left_seen[u] = 1;
      stack.push_back(u);
    }
  }
  while (!stack.empty()) {
    const StateId u = stack.back();
    stack.pop_back();
    for (StateId v : matching.adjacency()[u]) {
      if (right_seen[v] || matching.match_left()[u] == v) continue;
      right_seen[v] = 1;
      const StateId w = matching.match_right()[v];
      if (w != kFree && !left_seen[w]) {
        left_seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (StateId q = 0; q < n; ++q) {
    if (left_seen[q] && !right_seen[q]) result.antichain.states.push_back(q);
  }
  if (result.antichain.states.size() != result.width ||
      result.chains.chain_count != result.width) {
    throw InvariantError("Dilworth witnesses disagree with the matching size");
  }
  return result;
}

bool is_chain_partition(const StateOrder& order, const ChainPartition& partition) {
  const std::size_t n = order.size();
  if (partition.chain_of.size() != n) {
    throw InputError("chain partition covers " +
                     std::to_string(partition.chain_of.size()) +
                     " states, order has " + std::to_string(n));
  }
  std::vector<std::uint8_t> used(partition.chain_count, 0);
  for (StateId q = 0; q < n; ++q) {
    if (partition.chain_of[q] >= partition.chain_count) {
      throw InputError("state " + std::to_string(q) + " has chain index " +
                       std::to_string(partition.chain_of[q]) + " out of range");
    }
    used[partition.chain_of[q]] = 1;
  }
  if (std::find(used.begin(), used.end(), 0) != used.end()) {
    throw InputError("chain partition has an empty chain");
  }
  for (StateId u = 0; u < n; ++u) {
    for (StateId v = u + 1; v < n; ++v) {
      if (partition.chain_of[u] == partition.chain_of[v] && !order.comparable(u, v)) {
        return false;
      }
    }
  }
  return true;
}

bool is_antichain(const StateOrder& order, const Antichain& antichain) {
  for (std::size_t i = 0; i < antichain.states.size(); ++i) {
    for (std::size_t j = i + 1; j < antichain.states.size(); ++j) {
      if (order.comparable(antichain.states[i], antichain.states[j])) return false;
    }
  }
  return true;
}

std::vector<StatePair> hasse_cover_edges(const StateOrder& order) {
  const std::size_t n = order.size();
  std::vector<StatePair> out;
  for (StateId u = 0; u < n; ++u) {
    for (StateId v = 0; v < n; ++v) {
      if (!order.less(u, v)) continue;
      bool covered = true;
      for (StateId w = 0; w < n && covered; ++w) {
        if (order.less(u, w) && order.less(w, v)) covered = false;
      }
      if (covered) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<StateId> sort_chain(const StateOrder& order, std::vector<StateId> chain) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      if (!order.comparable(chain[i], chain[j])) {
        throw InvariantError("states " + std::to_string(chain[i]) + " and " +
                             std::to_string(chain[j]) +
                             " share a chain but are incomparable");
      }
    }
  }
  std::sort(chain.begin(), chain.end(),
            [&](StateId a, StateId b) { return order.less(a, b); });
  return chain;
}

}  // namespace colexwidth
