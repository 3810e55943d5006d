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

// Brute-force reference implementations for tests. Nothing here calls into
// the colex, langwidth or convexmn modules: the only shared pieces are Dfa
// and colex_compare.

#include <cstddef>
#include <optional>
#include <vector>

#include "colexwidth/automaton.hpp"
#include "colexwidth/colex.hpp"
#include "colexwidth/langwidth.hpp"

namespace colexwidth::oracle {

// Every (prefix, arrival state) pair with |prefix| <= max_len, co-lex sorted.
class BoundedLanguageView {
 public:
  BoundedLanguageView(const Dfa& dfa, std::size_t max_len);

  const std::vector<Prefix>& words() const noexcept { return words_; }
  std::vector<Word> words_at(StateId q) const;
  std::size_t max_len() const noexcept { return max_len_; }

 private:
  std::vector<Prefix> words_;
  std::size_t max_len_;
};

// Co-lex extremes of I_q restricted to words of length <= max_len, found by
// a greedy walk over predecessor sets. nullopt when no such word exists.
std::optional<Word> colex_min_word(const Dfa& dfa, StateId q, std::size_t max_len);
std::optional<Word> colex_max_word(const Dfa& dfa, StateId q, std::size_t max_len);

// Co-lex extremes among words of length exactly `len` that label a cycle at
// every state of `states`.
std::optional<Word> common_cycle(const Dfa& dfa, const std::vector<StateId>& states,
                                 std::size_t len, Extremum extremum);

// True iff some a in I_u and b in I_v, both of length <= max_len, satisfy
// a <= b co-lexicographically.
bool brute_leq(const Dfa& dfa, StateId u, StateId v, std::size_t max_len);
// Same predicate by listing every word.
bool naive_leq(const BoundedLanguageView& view, StateId u, StateId v);

StateOrder brute_order(const Dfa& dfa, std::size_t max_len);

// Largest antichain by subset scan. Throws ResourceError past 20 states.
std::size_t brute_width(const StateOrder& order);
inline constexpr std::size_t kBruteWidthLimit = 20;

// Scans pairs u1 < u2, gamma lengths 1..gamma_len and, for each, the best
// mus of length < |gamma| and <= mu_len. Returns the first hit.
std::optional<WitnessCertificate> brute_witness_k2(const Dfa& min_dfa, std::size_t mu_len,
                                                   std::size_t gamma_len);
// Literal enumeration of every (mu1, mu2, gamma). Only for tiny bounds.
std::optional<WitnessCertificate> naive_witness_k2(const Dfa& min_dfa, std::size_t mu_len,
                                                   std::size_t gamma_len);

// Independent check of the four certificate conditions.
bool check_certificate(const Dfa& dfa, const WitnessCertificate& cert);

}  // namespace colexwidth::oracle
