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

// Seeded generators for property tests and benchmarks.

#include <cstddef>
#include <optional>
#include <random>

#include "colexwidth/automaton.hpp"
#include "colexwidth/colex.hpp"

namespace colexwidth::oracle {

struct RandomDfaParams {
  std::size_t states = 4;
  std::size_t symbols = 2;       // uses the first letters of a..z
  double edge_density = 0.6;     // probability that a (state, symbol) edge exists
  double final_density = 0.5;
};

// Draws a DFA, trims it and returns nullopt when the language is empty.
std::optional<Dfa> random_trim_dfa(const RandomDfaParams& params, std::mt19937_64& rng);

// Keeps drawing until a trim DFA comes out. Throws after `attempts` failures.
Dfa random_trim_dfa_retry(const RandomDfaParams& params, std::mt19937_64& rng,
                          std::size_t attempts = 1000);

// A strict partial order on n elements: a random DAG, transitively closed.
StateOrder random_partial_order(std::size_t n, double density, std::mt19937_64& rng);

}  // namespace colexwidth::oracle
