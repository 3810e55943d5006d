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

#include "colexwidth/oracle.hpp"

#include <algorithm>
#include <deque>

#include "colexwidth/error.hpp"

namespace colexwidth::oracle {

namespace {

constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

std::vector<std::size_t> distances_from_initial(const Dfa& dfa) {
  std::vector<std::size_t> dist(dfa.state_count(), kUnreached);
  std::deque<StateId> queue{dfa.initial()};
  dist[dfa.initial()] = 0;
  while (!queue.empty()) {
    const StateId q = queue.front();
    queue.pop_front();
    for (std::size_t r = 0; r < dfa.symbol_count(); ++r) {
      const StateId t = dfa.next(q, r);
      if (t != kNoState && dist[t] == kUnreached) {
        dist[t] = dist[q] + 1;
        queue.push_back(t);
      }
    }
  }
  return dist;
}

using StateSet = std::vector<std::uint8_t>;

StateSet predecessors(const Dfa& dfa, const StateSet& set, std::size_t rank) {
  StateSet out(dfa.state_count(), 0);
  for (StateId p = 0; p < dfa.state_count(); ++p) {
    const StateId t = dfa.next(p, rank);
    if (t != kNoState && set[t]) out[p] = 1;
  }
  return out;
}

bool within(const StateSet& set, const std::vector<std::size_t>& dist, std::size_t budget) {
  for (std::size_t p = 0; p < set.size(); ++p) {
    if (set[p] && dist[p] != kUnreached && dist[p] <= budget) return true;
  }
  return false;
}

// Greedy over reversed words. Stopping is only possible when the initial
// state is in the current set; stopping beats any extension for the minimum
// and loses to any extension for the maximum.
std::optional<Word> extremal_word(const Dfa& dfa, StateId q, std::size_t max_len,
                                  bool largest) {
  const auto dist = distances_from_initial(dfa);
  StateSet set(dfa.state_count(), 0);
  set.at(q) = 1;
  if (!within(set, dist, max_len)) return std::nullopt;
  Word reversed;
  const std::size_t sigma = dfa.symbol_count();
  while (true) {
    if (!largest && set[dfa.initial()]) break;
    bool extended = false;
    if (reversed.size() < max_len) {
      const std::size_t budget = max_len - reversed.size() - 1;
      for (std::size_t i = 0; i < sigma; ++i) {
        const std::size_t r = largest ? sigma - 1 - i : i;
        StateSet next = predecessors(dfa, set, r);
        if (within(next, dist, budget)) {
          set = std::move(next);
          reversed.push_back(dfa.alphabet().symbol(r));
          extended = true;
          break;
        }
      }
    }
    if (!extended) break;
  }
  if (!set[dfa.initial()]) throw InvariantError("oracle: greedy walk lost the initial state");
  return Word(reversed.rbegin(), reversed.rend());
}

// Encodes tuples of states in base n.
struct TupleSpace {
  std::size_t n;
  std::size_t k;
  std::size_t size;

  TupleSpace(std::size_t states, std::size_t arity) : n(states), k(arity), size(1) {
    for (std::size_t i = 0; i < k; ++i) {
      if (size > (std::size_t{1} << 22) / std::max<std::size_t>(n, 1)) {
        throw ResourceError("oracle: tuple space too large");
      }
      size *= n;
    }
  }

  std::size_t step(const Dfa& dfa, std::size_t code, std::size_t rank) const {
    std::size_t out = 0;
    std::size_t mult = 1;
    for (std::size_t i = 0; i < k; ++i) {
      const StateId t = dfa.next(static_cast<StateId>(code % n), rank);
      if (t == kNoState) return kUnreached;
      out += t * mult;
      mult *= n;
      code /= n;
    }
    return out;
  }
};

bool readable(const Dfa& dfa, std::string_view word) {
  return std::all_of(word.begin(), word.end(),
                     [&](char c) { return dfa.alphabet().contains(c); });
}

}  // namespace

BoundedLanguageView::BoundedLanguageView(const Dfa& dfa, std::size_t max_len)
    : max_len_(max_len) {
  std::vector<Prefix> frontier{{Word{}, dfa.initial()}};
  words_ = frontier;
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Prefix> next;
    for (const Prefix& p : frontier) {
      for (std::size_t r = 0; r < dfa.symbol_count(); ++r) {
        const StateId t = dfa.next(p.state, r);
        if (t != kNoState) next.push_back({p.word + dfa.alphabet().symbol(r), t});
      }
    }
    words_.insert(words_.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  const Alphabet& alphabet = dfa.alphabet();
  std::sort(words_.begin(), words_.end(), [&](const Prefix& a, const Prefix& b) {
    return colex_compare(a.word, b.word, alphabet) == std::strong_ordering::less;
  });
}

std::vector<Word> BoundedLanguageView::words_at(StateId q) const {
  std::vector<Word> out;
  for (const Prefix& p : words_) {
    if (p.state == q) out.push_back(p.word);
  }
  return out;
}

std::optional<Word> colex_min_word(const Dfa& dfa, StateId q, std::size_t max_len) {
  return extremal_word(dfa, q, max_len, false);
}

std::optional<Word> colex_max_word(const Dfa& dfa, StateId q, std::size_t max_len) {
  return extremal_word(dfa, q, max_len, true);
}

std::optional<Word> common_cycle(const Dfa& dfa, const std::vector<StateId>& states,
                                 std::size_t len, Extremum extremum) {
  if (states.empty() || len == 0) return std::nullopt;
  const std::size_t n = dfa.state_count();
  const TupleSpace space(n, states.size());
  std::size_t start = 0;
  for (std::size_t i = 0, mult = 1; i < states.size(); ++i, mult *= n) {
    start += states[i] * mult;
  }
  const std::size_t sigma = dfa.symbol_count();

  // reach[t][x]: tuple x is reached from the start in exactly t steps.
  std::vector<StateSet> reach(len + 1, StateSet(space.size, 0));
  reach[0][start] = 1;
  for (std::size_t t = 0; t < len; ++t) {
    for (std::size_t x = 0; x < space.size; ++x) {
      if (!reach[t][x]) continue;
      for (std::size_t r = 0; r < sigma; ++r) {
        const std::size_t y = space.step(dfa, x, r);
        if (y != kUnreached) reach[t + 1][y] = 1;
      }
    }
  }
  if (!reach[len][start]) return std::nullopt;

  StateSet set(space.size, 0);
  set[start] = 1;
  Word reversed;
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t remaining = len - i - 1;
    bool extended = false;
    for (std::size_t j = 0; j < sigma && !extended; ++j) {
      const std::size_t r = extremum == Extremum::Largest ? sigma - 1 - j : j;
      StateSet next(space.size, 0);
      bool any = false;
      for (std::size_t x = 0; x < space.size; ++x) {
        if (!reach[remaining][x]) continue;
        const std::size_t y = space.step(dfa, x, r);
        if (y != kUnreached && set[y]) {
          next[x] = 1;
          any = true;
        }
      }
      if (any) {
        set = std::move(next);
        reversed.push_back(dfa.alphabet().symbol(r));
        extended = true;
      }
    }
    if (!extended) throw InvariantError("oracle: cycle walk got stuck");
  }
  return Word(reversed.rbegin(), reversed.rend());
}

bool brute_leq(const Dfa& dfa, StateId u, StateId v, std::size_t max_len) {
  const auto lo = colex_min_word(dfa, u, max_len);
  const auto hi = colex_max_word(dfa, v, max_len);
  if (!lo || !hi) return false;
  return colex_compare(*lo, *hi, dfa.alphabet()) != std::strong_ordering::greater;
}

bool naive_leq(const BoundedLanguageView& view, StateId u, StateId v) {
  // The view is sorted, so some a in I_u sits at or before some b in I_v
  // iff the first I_u entry comes no later than the last I_v entry.
  const auto& words = view.words();
  std::optional<std::size_t> first_u;
  std::optional<std::size_t> last_v;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].state == u && !first_u) first_u = i;
    if (words[i].state == v) last_v = i;
  }
  return first_u && last_v && *first_u <= *last_v;
}

StateOrder brute_order(const Dfa& dfa, std::size_t max_len) {
  const std::size_t n = dfa.state_count();
  std::vector<Word> lo(n);
  std::vector<Word> hi(n);
  std::vector<std::uint8_t> present(n, 0);
  for (StateId q = 0; q < n; ++q) {
    auto a = colex_min_word(dfa, q, max_len);
    auto b = colex_max_word(dfa, q, max_len);
    if (a && b) {
      lo[q] = std::move(*a);
      hi[q] = std::move(*b);
      present[q] = 1;
    }
  }
  StateOrder order(n);
  for (StateId u = 0; u < n; ++u) {
    for (StateId v = 0; v < n; ++v) {
      if (u == v || !present[u] || !present[v]) continue;
      // u below v iff nothing of I_v is <= anything of I_u.
      if (colex_compare(lo[v], hi[u], dfa.alphabet()) == std::strong_ordering::greater) {
        order.strictly_below.set(u, v);
      }
    }
  }
  return order;
}

std::size_t brute_width(const StateOrder& order) {
  const std::size_t n = order.size();
  if (n > kBruteWidthLimit) {
    throw ResourceError("brute_width: " + std::to_string(n) + " states exceeds the limit of " +
                        std::to_string(kBruteWidthLimit));
  }
  if (n == 0) return 0;
  std::vector<std::uint32_t> comparable(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && (order.strictly_below(i, j) || order.strictly_below(j, i))) {
        comparable[i] |= std::uint32_t{1} << j;
      }
    }
  }
  std::size_t best = 0;
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  for (std::uint32_t mask = 1; mask != 0 && mask <= full; ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if ((mask >> i) & 1U) ok = (comparable[i] & mask) == 0;
    }
    if (ok) best = size;
  }
  return best;
}

std::optional<WitnessCertificate> brute_witness_k2(const Dfa& min_dfa, std::size_t mu_len,
                                                   std::size_t gamma_len) {
  const Alphabet& alphabet = min_dfa.alphabet();
  const std::size_t n = min_dfa.state_count();
  for (StateId u1 = 0; u1 < n; ++u1) {
    for (StateId u2 = u1 + 1; u2 < n; ++u2) {
      const std::vector<StateId> pair{u1, u2};
      for (std::size_t len = 1; len <= gamma_len; ++len) {
        const std::size_t mu_cap = std::min(mu_len, len - 1);
        for (Direction direction : {Direction::MusBelowGamma, Direction::GammaBelowMus}) {
          const bool below = direction == Direction::MusBelowGamma;
          const auto gamma =
              common_cycle(min_dfa, pair, len, below ? Extremum::Largest : Extremum::Smallest);
          if (!gamma) break;
          const auto m1 = below ? colex_min_word(min_dfa, u1, mu_cap)
                                : colex_max_word(min_dfa, u1, mu_cap);
          const auto m2 = below ? colex_min_word(min_dfa, u2, mu_cap)
                                : colex_max_word(min_dfa, u2, mu_cap);
          if (!m1 || !m2) continue;
          const auto want = below ? std::strong_ordering::less : std::strong_ordering::greater;
          if (colex_compare(*m1, *gamma, alphabet) == want &&
              colex_compare(*m2, *gamma, alphabet) == want) {
            WitnessCertificate cert{pair, {*m1, *m2}, *gamma, direction};
            if (!check_certificate(min_dfa, cert)) {
              throw InvariantError("oracle: assembled certificate fails its own check");
            }
            return cert;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<WitnessCertificate> naive_witness_k2(const Dfa& min_dfa, std::size_t mu_len,
                                                   std::size_t gamma_len) {
  const BoundedLanguageView view(min_dfa, mu_len);
  const std::size_t n = min_dfa.state_count();
  const std::size_t sigma = min_dfa.symbol_count();
  for (StateId u1 = 0; u1 < n; ++u1) {
    for (StateId u2 = u1 + 1; u2 < n; ++u2) {
      const auto mus1 = view.words_at(u1);
      const auto mus2 = view.words_at(u2);
      for (std::size_t len = 1; len <= gamma_len; ++len) {
        std::vector<std::size_t> digits(len, 0);
        while (true) {
          Word gamma;
          for (std::size_t d : digits) gamma.push_back(min_dfa.alphabet().symbol(d));
          for (Direction direction : {Direction::MusBelowGamma, Direction::GammaBelowMus}) {
            for (const Word& a : mus1) {
              for (const Word& b : mus2) {
                WitnessCertificate cert{{u1, u2}, {a, b}, gamma, direction};
                if (check_certificate(min_dfa, cert)) return cert;
              }
            }
          }
          std::size_t pos = len;
          while (pos > 0 && ++digits[pos - 1] == sigma) digits[--pos] = 0;
          if (pos == 0) break;
        }
      }
    }
  }
  return std::nullopt;
}

bool check_certificate(const Dfa& dfa, const WitnessCertificate& cert) {
  const std::size_t k = cert.states.size();
  if (k < 2 || cert.mus.size() != k || cert.gamma.empty()) return false;
  if (!readable(dfa, cert.gamma)) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const StateId u = cert.states[i];
    if (u >= dfa.state_count()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (cert.states[j] == u) return false;
    }
    const Word& mu = cert.mus[i];
    if (!readable(dfa, mu) || mu.size() >= cert.gamma.size()) return false;
    if (dfa.walk(dfa.initial(), mu) != u) return false;
    if (dfa.walk(u, cert.gamma) != u) return false;
    const auto c = colex_compare(mu, cert.gamma, dfa.alphabet());
    const auto want = cert.direction == Direction::MusBelowGamma ? std::strong_ordering::less
                                                                 : std::strong_ordering::greater;
    if (c != want) return false;
  }
  return true;
}

}  // namespace colexwidth::oracle
