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

#include "colexwidth/random_dfa.hpp"

#include <algorithm>
#include <numeric>

#include "colexwidth/error.hpp"

namespace colexwidth::oracle {

std::optional<Dfa> random_trim_dfa(const RandomDfaParams& params, std::mt19937_64& rng) {
  if (params.states == 0 || params.symbols == 0 || params.symbols > 26) {
    throw InputError("random_trim_dfa: need 1..26 symbols and at least one state");
  }
  std::string letters;
  for (std::size_t i = 0; i < params.symbols; ++i) letters.push_back(static_cast<char>('a' + i));
  Dfa dfa(Alphabet(letters), params.states, 0);
  std::bernoulli_distribution edge(params.edge_density);
  std::bernoulli_distribution accept(params.final_density);
  std::uniform_int_distribution<StateId> target(0, static_cast<StateId>(params.states - 1));
  for (StateId q = 0; q < params.states; ++q) {
    if (accept(rng)) dfa.set_final(q);
    for (char c : letters) {
      if (edge(rng)) dfa.add_transition(q, c, target(rng));
    }
  }
  if (validate_trim(dfa).empty_language) return std::nullopt;
  return trim(dfa);
}

Dfa random_trim_dfa_retry(const RandomDfaParams& params, std::mt19937_64& rng,
                          std::size_t attempts) {
  for (std::size_t i = 0; i < attempts; ++i) {
    if (auto dfa = random_trim_dfa(params, rng)) return std::move(*dfa);
  }
  throw InvariantError("random_trim_dfa_retry: no nonempty language drawn");
}

StateOrder random_partial_order(std::size_t n, double density, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution edge(density);
  StateOrder order(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(rng)) order.strictly_below.set(perm[i], perm[j]);
    }
  }
  // Warshall closure.
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!order.strictly_below(i, m)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (order.strictly_below(m, j)) order.strictly_below.set(i, j);
      }
    }
  }
  return order;
}

}  // namespace colexwidth::oracle
