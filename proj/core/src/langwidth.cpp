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

#include "colexwidth/langwidth.hpp"

#include <algorithm>
#include <compare>
#include <limits>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "colexwidth/colex.hpp"
#include "colexwidth/error.hpp"

namespace colexwidth {

namespace {

// Upper limit on stored DP cells per table.
constexpr std::size_t kMaxCells = std::size_t{1} << 26;
// Upper limit on product tuples tracked per start tuple.
constexpr std::size_t kMaxTuples = std::size_t{1} << 22;

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, std::uint64_t partial) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a) {
    throw OverflowError("length bound overflows 64 bits; set a cap", partial);
  }
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t partial) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw OverflowError("length bound overflows 64 bits; set a cap", partial);
  }
  return a * b;
}

// Iterates symbol ranks in extremal-first order.
template <typename F>
void for_each_symbol(std::size_t sigma, Extremum extremum, F&& f) {
  if (extremum == Extremum::Smallest) {
    for (std::size_t r = 0; r < sigma; ++r) f(r);
  } else {
    for (std::size_t r = sigma; r-- > 0;) f(r);
  }
}

// Backward readers over stored labels: symbol() is the last unread character.
class PathReader {
 public:
  PathReader(const ExtremalPathTable& table, StateId u, std::size_t nodes)
      : table_(&table), u_(u), nodes_(nodes) {}
  bool done() const { return nodes_ == 1; }
  std::size_t symbol() const { return table_->last_symbol(u_, nodes_); }
  void step() {
    u_ = table_->predecessor(u_, nodes_);
    --nodes_;
  }

 private:
  const ExtremalPathTable* table_;
  StateId u_;
  std::size_t nodes_;
};

template <typename A, typename B>
std::strong_ordering compare_backward(A a, B b) {
  while (!a.done() && !b.done()) {
    const std::size_t x = a.symbol();
    const std::size_t y = b.symbol();
    if (x != y) return x <=> y;
    a.step();
    b.step();
  }
  if (a.done() && b.done()) return std::strong_ordering::equal;
  return a.done() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string tuple_key(std::span<const StateId> tuple) {
  return std::string(reinterpret_cast<const char*>(tuple.data()),
                     tuple.size() * sizeof(StateId));
}

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ using Wide = unsigned __int128;
  Wide acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(acc);
}

class CycleReader {
 public:
  CycleReader(const CycleTable& table, std::size_t nodes, std::uint32_t cell)
      : table_(&table), nodes_(nodes), cell_(cell) {}
  bool done() const { return nodes_ == 1; }
  std::size_t symbol() const { return table_->cell_symbol(nodes_, cell_); }
  void step() {
    cell_ = table_->cell_predecessor(nodes_, cell_);
    --nodes_;
  }

 private:
  const CycleTable* table_;
  std::size_t nodes_;
  std::uint32_t cell_;
};

}  // namespace

const char* to_string(Direction direction) noexcept {
  return direction == Direction::MusBelowGamma ? "mus_below_gamma"
                                               : "gamma_below_mus";
}

std::optional<Direction> parse_direction(std::string_view text) noexcept {
  if (text == "mus_below_gamma") return Direction::MusBelowGamma;
  if (text == "gamma_below_mus") return Direction::GammaBelowMus;
  return std::nullopt;
}

std::uint64_t bound_n(std::uint64_t q_count, std::uint64_t k) {
  if (q_count < 1) throw InputError("bound_n: state count must be positive");
  if (k < 2) throw InputError("bound_n: k must be at least 2");
  std::uint64_t total = 2 * k - 3;
  std::uint64_t power = 1;
  for (std::uint64_t t = 1; t <= k; ++t) power = checked_mul(power, q_count, total);
  total = checked_add(total, power, total);
  power = 1;
  for (std::uint64_t t = 1; t <= 2 * k - 1; ++t) {
    power = checked_mul(power, q_count, total);
    total = checked_add(total, power, total);
  }
  return total;
}

DpBounds DpBounds::exact(std::uint64_t q_count, std::uint64_t k) {
  return DpBounds{bound_n(q_count, k), std::nullopt};
}

DpBounds DpBounds::capped(std::uint64_t q_count, std::uint64_t k, std::uint64_t cap) {
  if (cap < 2) throw InputError("cap must be at least 2");
  DpBounds bounds;
  bounds.cap = cap;
  try {
    bounds.n_exact = bound_n(q_count, k);
  } catch (const OverflowError&) {
    bounds.n_exact.reset();
  }
  return bounds;
}

std::uint64_t DpBounds::limit() const {
  if (n_exact && cap) return std::min(*n_exact, *cap);
  if (n_exact) return *n_exact;
  if (cap) return *cap;
  throw ResourceError("length bound overflowed and no cap was given");
}

// --- verification ----------------------------------------------------------

VerificationResult verify_certificate(const Dfa& dfa, const WitnessCertificate& cert) {
  VerificationResult result;
  auto& reasons = result.reasons;
  const Alphabet& alphabet = dfa.alphabet();

  if (cert.states.size() < 2) reasons.push_back("certificate needs at least two states");
  if (cert.mus.size() != cert.states.size()) {
    reasons.push_back("expected one mu per state (" + std::to_string(cert.states.size()) +
                      " states, " + std::to_string(cert.mus.size()) + " mus)");
  }
  std::unordered_set<StateId> seen;
  for (StateId u : cert.states) {
    if (u >= dfa.state_count()) {
      reasons.push_back("state " + std::to_string(u) + " does not exist");
    } else if (!seen.insert(u).second) {
      reasons.push_back("state " + std::to_string(u) + " is listed twice");
    }
  }
  const auto over_alphabet = [&](const Word& w, const std::string& name) {
    for (char c : w) {
      if (!alphabet.contains(c)) {
        reasons.push_back(name + " uses '" + std::string(1, c) +
                          "', which is not in the alphabet");
        return false;
      }
    }
    return true;
  };
  const bool gamma_ok = over_alphabet(cert.gamma, "gamma");
  if (cert.gamma.empty()) reasons.push_back("gamma must be nonempty");
  if (!reasons.empty() && cert.mus.size() != cert.states.size()) return result;

  for (std::size_t j = 0; j < cert.states.size() && j < cert.mus.size(); ++j) {
    const StateId u = cert.states[j];
    const Word& mu = cert.mus[j];
    const std::string name = "mu[" + std::to_string(j) + "]";
    if (u >= dfa.state_count()) continue;
    if (over_alphabet(mu, name)) {
      const auto reached = dfa.run(mu);
      if (!reached) {
        reasons.push_back(name + " = \"" + mu + "\" leaves the automaton");
      } else if (*reached != u) {
        reasons.push_back(name + " = \"" + mu + "\" reaches state " +
                          std::to_string(*reached) + ", not " + std::to_string(u));
      }
      if (gamma_ok) {
        const auto order = colex_compare(mu, cert.gamma, alphabet);
        if (cert.direction == Direction::MusBelowGamma &&
            order != std::strong_ordering::less) {
          reasons.push_back(name + " is not co-lex below gamma");
        }
        if (cert.direction == Direction::GammaBelowMus &&
            order != std::strong_ordering::greater) {
          reasons.push_back("gamma is not co-lex below " + name);
        }
      }
    }
    if (mu.size() >= cert.gamma.size()) {
      reasons.push_back(name + " is not shorter than gamma");
    }
    if (gamma_ok && !cert.gamma.empty()) {
      const auto back = dfa.walk(u, cert.gamma);
      if (!back || *back != u) {
        reasons.push_back("gamma does not label a cycle at state " + std::to_string(u));
      }
    }
  }
  result.ok = reasons.empty();
  return result;
}

// --- step 1: extremal paths from the initial state --------------------------

ExtremalPathTable::ExtremalPathTable(const Dfa& dfa, Extremum extremum)
    : dfa_(&dfa), n_(dfa.state_count()), extremum_(extremum) {
  levels_ = stored_levels_ = 1;
  pred_.assign(n_, kNoState);
  symbol_.assign(n_, 0);
  rank_.assign(n_, kUnset);
  rank_[dfa.initial()] = 0;
  frontier_ = {dfa.initial()};
  cells_ = 1;
}

ExtremalPathTable::ExtremalPathTable(const Dfa& dfa, std::size_t max_nodes,
                                     Extremum extremum)
    : ExtremalPathTable(dfa, extremum) {
  extend_to(max_nodes);
}

void ExtremalPathTable::extend_to(std::size_t nodes) {
  const std::size_t sigma = dfa_->symbol_count();
  while (levels_ < nodes) {
    ++levels_;
    if (frontier_.empty()) continue;  // every longer level is empty as well
    if ((stored_levels_ + 1) * n_ > kMaxCells) {
      throw ResourceError("path table exceeds " + std::to_string(kMaxCells) +
                          " cells; lower the length cap");
    }
    const std::size_t base = stored_levels_ * n_;
    pred_.resize(base + n_, kNoState);
    symbol_.resize(base + n_, 0);
    rank_.resize(base + n_, kUnset);
    ++stored_levels_;

    // The first time a state is hit, (symbol, predecessor rank) is extremal,
    // and hits arrive in extremal-first order of the new labels.
    std::vector<StateId> next;
    for_each_symbol(sigma, extremum_, [&](std::size_t r) {
      for (StateId v : frontier_) {
        const StateId u = dfa_->next(v, r);
        if (u == kNoState || rank_[base + u] != kUnset) continue;
        pred_[base + u] = v;
        symbol_[base + u] = static_cast<std::uint8_t>(r);
        rank_[base + u] = static_cast<std::uint32_t>(next.size());
        next.push_back(u);
      }
    });
    if (extremum_ == Extremum::Largest) {
      for (StateId u : next) {
        rank_[base + u] = static_cast<std::uint32_t>(next.size() - 1 - rank_[base + u]);
      }
    }
    cells_ += next.size();
    frontier_ = std::move(next);
  }
}

bool ExtremalPathTable::defined(StateId u, std::size_t nodes) const {
  return nodes >= 1 && nodes <= stored_levels_ && u < n_ &&
         rank_[slot(u, nodes)] != kUnset;
}

StateId ExtremalPathTable::predecessor(StateId u, std::size_t nodes) const {
  return defined(u, nodes) ? pred_[slot(u, nodes)] : kNoState;
}

std::size_t ExtremalPathTable::last_symbol(StateId u, std::size_t nodes) const {
  return symbol_[slot(u, nodes)];
}

std::size_t ExtremalPathTable::rank(StateId u, std::size_t nodes) const {
  if (!defined(u, nodes)) throw InputError("no path of that length reaches the state");
  return rank_[slot(u, nodes)];
}

Word ExtremalPathTable::label(StateId u, std::size_t nodes) const {
  if (!defined(u, nodes)) throw InputError("no path of that length reaches the state");
  Word out(nodes - 1, '\0');
  for (std::size_t i = nodes; i > 1; --i) {
    out[i - 2] = dfa_->alphabet().symbol(symbol_[slot(u, i)]);
    u = pred_[slot(u, i)];
  }
  return out;
}

// --- step 2: extremal common cycle labels ----------------------------------

CycleTable::CycleTable(const Dfa& dfa, std::span<const StateId> start, Extremum extremum)
    : dfa_(&dfa), extremum_(extremum) {
  const std::size_t sigma = dfa.symbol_count();
  const std::size_t k = start.size();
  if (k == 0) throw InputError("start tuple is empty");

  // Tuples reachable from the start tuple in the k-fold product.
  std::unordered_map<std::string, std::uint32_t> ids;
  tuples_.emplace_back(start.begin(), start.end());
  ids.emplace(tuple_key(start), 0);
  std::vector<StateId> scratch(k);
  for (std::size_t id = 0; id < tuples_.size(); ++id) {
    for (std::size_t r = 0; r < sigma; ++r) {
      bool defined = true;
      for (std::size_t i = 0; i < k && defined; ++i) {
        scratch[i] = dfa.next(tuples_[id][i], r);
        defined = scratch[i] != kNoState;
      }
      std::uint32_t target = kUnset;
      if (defined) {
        auto [it, inserted] =
            ids.try_emplace(tuple_key(scratch), static_cast<std::uint32_t>(tuples_.size()));
        if (inserted) {
          if (tuples_.size() >= kMaxTuples) {
            throw ResourceError("product of the start tuple exceeds " +
                                std::to_string(kMaxTuples) + " tuples");
          }
          tuples_.push_back(scratch);
        }
        target = it->second;
      }
      succ_.push_back(target);
    }
  }

  // Keep only tuples that can return to the start tuple.
  const std::size_t count = tuples_.size();
  std::vector<std::vector<std::uint32_t>> reverse(count);
  for (std::size_t id = 0; id < count; ++id) {
    for (std::size_t r = 0; r < sigma; ++r) {
      const std::uint32_t t = succ_[id * sigma + r];
      if (t != kUnset) reverse[t].push_back(static_cast<std::uint32_t>(id));
    }
  }
  on_cycle_ = !reverse[0].empty();
  std::vector<std::uint8_t> useful(count, 0);
  std::vector<std::uint32_t> stack{0};
  useful[0] = 1;
  while (!stack.empty()) {
    const std::uint32_t id = stack.back();
    stack.pop_back();
    for (std::uint32_t p : reverse[id]) {
      if (!useful[p]) {
        useful[p] = 1;
        stack.push_back(p);
      }
    }
  }
  for (auto& t : succ_) {
    if (t != kUnset && !useful[t]) t = kUnset;
  }

  levels_.push_back({Cell{0, kUnset, 0}});
  start_cell_.push_back(kUnset);
  stamp_.assign(count, 0);
  cells_ = 1;
}

bool CycleTable::extend() {
  const std::size_t sigma = dfa_->symbol_count();
  const auto& current = levels_.back();
  const std::uint64_t level = levels_.size() + 1;
  std::vector<Cell> next;
  std::uint32_t start_cell = kUnset;
  if (!current.empty()) {
    if (cells_ + tuples_.size() > kMaxCells) {
      throw ResourceError("cycle table exceeds " + std::to_string(kMaxCells) +
                          " cells; lower the length cap");
    }
    for_each_symbol(sigma, extremum_, [&](std::size_t r) {
      for (std::uint32_t i = 0; i < current.size(); ++i) {
        const std::uint32_t t = succ_[current[i].tuple * sigma + r];
        if (t == kUnset || stamp_[t] == level) continue;
        stamp_[t] = level;
        if (t == 0) start_cell = static_cast<std::uint32_t>(next.size());
        next.push_back(Cell{t, i, static_cast<std::uint8_t>(r)});
      }
    });
  }
  cells_ += next.size();
  const bool live = !next.empty();
  levels_.push_back(std::move(next));
  start_cell_.push_back(start_cell);
  return live;
}

bool CycleTable::cycle_at(std::size_t nodes) const {
  return nodes >= 2 && nodes <= levels_.size() && start_cell_[nodes - 1] != kUnset;
}

std::optional<Word> CycleTable::cycle_label(std::size_t nodes) const {
  if (!cycle_at(nodes)) return std::nullopt;
  Word out(nodes - 1, '\0');
  std::uint32_t cell = start_cell_[nodes - 1];
  for (std::size_t i = nodes; i > 1; --i) {
    const Cell& c = levels_[i - 1][cell];
    out[i - 2] = dfa_->alphabet().symbol(c.symbol);
    cell = c.pred;
  }
  return out;
}

// --- step 3: combining paths and cycles -------------------------------------

std::vector<StateId> cyclic_states(const Dfa& dfa) {
  const std::size_t n = dfa.state_count();
  std::vector<StateId> out;
  std::vector<std::uint8_t> seen(n);
  for (StateId q = 0; q < n; ++q) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<StateId> stack;
    for (std::size_t r = 0; r < dfa.symbol_count(); ++r) {
      const StateId t = dfa.next(q, r);
      if (t != kNoState && !seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
    while (!stack.empty() && !seen[q]) {
      const StateId p = stack.back();
      stack.pop_back();
      for (std::size_t r = 0; r < dfa.symbol_count(); ++r) {
        const StateId t = dfa.next(p, r);
        if (t != kNoState && !seen[t]) {
          seen[t] = 1;
          stack.push_back(t);
        }
      }
    }
    if (seen[q]) out.push_back(q);
  }
  return out;
}

namespace {

// Extremal path labels plus, per level, the level of the extremal label among
// all strictly shorter ones.
class RunningExtremum {
 public:
  RunningExtremum(const Dfa& dfa, Extremum extremum) : table_(dfa, extremum) {
    best_.assign(2 * table_.state_count(), 0);  // levels 1 and 2 (nodes)
    // Before level 2 only the empty word at the initial state exists.
    best_[1 * table_.state_count() + dfa.initial()] = 1;
    ready_ = 2;
  }

  // Level (node count) of the extremal label of u over levels < nodes; 0 if none.
  std::uint32_t best_before(StateId u, std::size_t nodes) {
    extend_to(nodes);
    return best_[(nodes - 1) * table_.state_count() + u];
  }

  const ExtremalPathTable& table() const { return table_; }

 private:
  void extend_to(std::size_t nodes) {
    const std::size_t n = table_.state_count();
    while (ready_ < nodes) {
      const std::size_t level = ready_;  // newly available label level
      table_.extend_to(level);
      if ((ready_ + 1) * n > kMaxCells) {
        throw ResourceError("path table exceeds " + std::to_string(kMaxCells) +
                            " cells; lower the length cap");
      }
      best_.resize((ready_ + 1) * n, 0);
      for (StateId u = 0; u < n; ++u) {
        std::uint32_t best = best_[(ready_ - 1) * n + u];
        if (table_.defined(u, level)) {
          if (best == 0) {
            best = static_cast<std::uint32_t>(level);
          } else {
            const auto order = compare_backward(PathReader(table_, u, level),
                                                PathReader(table_, u, best));
            const bool better = table_.extremum() == Extremum::Smallest
                                    ? order == std::strong_ordering::less
                                    : order == std::strong_ordering::greater;
            if (better) best = static_cast<std::uint32_t>(level);
          }
        }
        best_[ready_ * n + u] = best;
      }
      ++ready_;
    }
  }

  ExtremalPathTable table_;
  std::vector<std::uint32_t> best_;  // best_[(nodes - 1) * n + u]
  std::size_t ready_;                // best_before is known for nodes <= ready_
};

struct Plan {
  Direction direction;
  Extremum mu;
  Extremum gamma;
};

constexpr Plan kPlans[] = {
    {Direction::MusBelowGamma, Extremum::Smallest, Extremum::Largest},
    {Direction::GammaBelowMus, Extremum::Largest, Extremum::Smallest},
};

class WitnessSearch {
 public:
  WitnessSearch(const Dfa& dfa, std::uint64_t limit, DpStats& stats)
      : dfa_(dfa), stats_(stats) {
    if (limit >= std::numeric_limits<std::size_t>::max() / 2) {
      throw ResourceError("length bound too large to explore; set a cap");
    }
    max_nodes_ = static_cast<std::size_t>(limit) + 1;
  }

  std::optional<WitnessCertificate> search(std::span<const StateId> tuple) {
    for (std::size_t p = 0; p < 2; ++p) {
      const Plan& plan = kPlans[p];
      CycleTable cycles(dfa_, tuple, plan.gamma);
      if (!cycles.has_cycles()) {
        ++stats_.tuples_pruned_no_common_cycle;
        return std::nullopt;
      }
      if (p == 0) ++stats_.tuples_explored;
      auto found = search_direction(tuple, plan, cycles);
      stats_.cycle_cells += cycles.cell_count();
      if (found) return found;
    }
    return std::nullopt;
  }

  void finish() {
    for (const auto& mu : mus_) {
      if (mu) stats_.path_cells += mu->table().cell_count();
    }
  }

 private:
  RunningExtremum& mu_index(Extremum e) {
    auto& slot = mus_[e == Extremum::Smallest ? 0 : 1];
    if (!slot) slot.emplace(dfa_, e);
    return *slot;
  }

  std::optional<WitnessCertificate> search_direction(std::span<const StateId> tuple,
                                                     const Plan& plan,
                                                     CycleTable& cycles) {
    RunningExtremum& mus = mu_index(plan.mu);
    const std::size_t k = tuple.size();
    std::vector<std::uint32_t> best(k);
    for (std::size_t nodes = 2; nodes <= max_nodes_; ++nodes) {
      if (!cycles.extend()) break;
      stats_.max_level = std::max<std::uint64_t>(stats_.max_level, nodes);
      if (!cycles.cycle_at(nodes)) continue;
      bool all = true;
      for (std::size_t j = 0; j < k && all; ++j) {
        best[j] = mus.best_before(tuple[j], nodes);
        all = best[j] != 0;
      }
      if (!all) continue;
      const std::uint32_t start_cell = cycles.start_cell(nodes);
      for (std::size_t j = 0; j < k && all; ++j) {
        const auto order = compare_backward(PathReader(mus.table(), tuple[j], best[j]),
                                            CycleReader(cycles, nodes, start_cell));
        all = plan.direction == Direction::MusBelowGamma
                  ? order == std::strong_ordering::less
                  : order == std::strong_ordering::greater;
      }
      if (!all) continue;
      WitnessCertificate cert;
      cert.states.assign(tuple.begin(), tuple.end());
      for (std::size_t j = 0; j < k; ++j) {
        cert.mus.push_back(mus.table().label(tuple[j], best[j]));
      }
      cert.gamma = *cycles.cycle_label(nodes);
      cert.direction = plan.direction;
      return cert;
    }
    return std::nullopt;
  }

  const Dfa& dfa_;
  DpStats& stats_;
  std::size_t max_nodes_;
  std::optional<RunningExtremum> mus_[2];
};

}  // namespace

namespace {

void check_certificate(const Dfa& dfa, const WitnessCertificate& cert) {
  const auto verdict = verify_certificate(dfa, cert);
  if (!verdict) {
    throw InvariantError("search produced an invalid certificate: " + verdict.reasons.front());
  }
}

// Next k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Pruned tuples have no common cycle at any length, so a refutation that
// never ran a DP holds whatever the cap.
bool all_pruned(const DpStats& s) {
  return s.tuples_pruned_acyclic_state + s.tuples_pruned_no_common_cycle == s.tuples_total;
}

WidthQuery run_query(const Dfa& dfa, std::size_t k, const DpBounds& bounds) {
  if (k < 2) throw InputError("k must be at least 2");
  WidthQuery query;
  query.k = k;
  query.stats.bound = bounds.n_exact.value_or(0);
  query.stats.limit = bounds.limit();

  const std::size_t n = dfa.state_count();
  const std::vector<StateId> cyclic = cyclic_states(dfa);
  query.stats.tuples_total = saturating_binomial(n, k);
  query.stats.tuples_pruned_acyclic_state =
      query.stats.tuples_total - saturating_binomial(cyclic.size(), k);

  if (cyclic.size() >= k) {
    WitnessSearch search(dfa, query.stats.limit, query.stats);
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<StateId> tuple(k);
    do {
      for (std::size_t i = 0; i < k; ++i) tuple[i] = cyclic[idx[i]];
      if (auto cert = search.search(tuple)) {
        query.certificate = std::move(cert);
        break;
      }
    } while (next_combination(idx, cyclic.size()));
    search.finish();
  }
  if (query.certificate) check_certificate(dfa, *query.certificate);
  query.exact = query.certificate.has_value() || bounds.is_exact() || all_pruned(query.stats);
  return query;
}

}  // namespace

SearchResult width_at_least(const Dfa& dfa, std::size_t k, const DpBounds& bounds) {
  if (k < 2) throw InputError("k must be at least 2");
  require_trim(dfa);
  Dfa automaton = is_minimal(dfa) ? dfa : minimize(dfa);
  WidthQuery query = run_query(automaton, k, bounds);
  return SearchResult{std::move(query), std::move(automaton)};
}

WidthQuery entangled_tuple(const Dfa& min_dfa, std::span<const StateId> states,
                           const DpBounds& bounds) {
  if (states.size() < 2) throw InputError("a tuple needs at least two states");
  require_trim(min_dfa);
  if (!is_minimal(min_dfa)) {
    throw InputError("entangled_tuple expects a minimum DFA; minimize it first");
  }
  std::unordered_set<StateId> distinct;
  for (StateId u : states) {
    if (u >= min_dfa.state_count()) {
      throw InputError("state " + std::to_string(u) + " does not exist");
    }
    if (!distinct.insert(u).second) {
      throw InputError("state " + std::to_string(u) + " is listed twice");
    }
  }

  WidthQuery query;
  query.k = states.size();
  query.stats.bound = bounds.n_exact.value_or(0);
  query.stats.limit = bounds.limit();
  query.stats.tuples_total = 1;
  const std::vector<StateId> cyclic = cyclic_states(min_dfa);
  const bool all_cyclic = std::all_of(states.begin(), states.end(), [&](StateId u) {
    return std::binary_search(cyclic.begin(), cyclic.end(), u);
  });
  if (!all_cyclic) {
    query.stats.tuples_pruned_acyclic_state = 1;
  } else {
    WitnessSearch search(min_dfa, query.stats.limit, query.stats);
    query.certificate = search.search(states);
    search.finish();
  }
  if (query.certificate) check_certificate(min_dfa, *query.certificate);
  query.exact = query.certificate.has_value() || bounds.is_exact() || all_pruned(query.stats);
  return query;
}

LanguageWidth width_lang(const Dfa& dfa, std::optional<std::uint64_t> cap,
                         std::optional<std::size_t> max_k) {
  require_trim(dfa);
  if (max_k && *max_k < 1) throw InputError("max-k must be at least 1");
  LanguageWidth result{.width = 1,
                       .certificate = std::nullopt,
                       .exact = true,
                       .upper_bound = 1,
                       .automaton = is_minimal(dfa) ? dfa : minimize(dfa),
                       .queries = {}};
  const Dfa& automaton = result.automaton;
  result.upper_bound = width_dfa(state_order(automaton)).width;

  const std::uint64_t q = automaton.state_count();
  const auto query = [&](std::size_t k) -> const WidthQuery& {
    const DpBounds bounds = cap ? DpBounds::capped(q, k, *cap) : DpBounds::exact(q, k);
    result.queries.push_back(run_query(automaton, k, bounds));
    return result.queries.back();
  };

  std::size_t lo = 1;  // width >= lo is proven
  std::size_t hi = result.upper_bound;  // width <= hi unless a capped query said no
  if (max_k && *max_k < hi) hi = *max_k;
  std::optional<WitnessCertificate> best;
  bool refuted_inexactly = false;
  const auto record = [&](const WidthQuery& q_result) {
    if (q_result.certificate) {
      lo = q_result.k;
      best = q_result.certificate;
      return true;
    }
    if (!q_result.exact) refuted_inexactly = true;
    hi = q_result.k - 1;
    return false;
  };

  for (std::size_t k = 2; k <= hi;) {
    if (!record(query(k))) break;
    if (k == hi) break;
    k = std::min(2 * k, hi);
  }
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    record(query(mid));
  }

  result.width = lo;
  result.certificate = best;
  if (max_k && *max_k < result.upper_bound) {
    // Capped by max-k: definitive only if the search refuted something <= max_k.
    result.exact = lo < *max_k;
  }
  if (refuted_inexactly) result.exact = false;
  return result;
}

}  // namespace colexwidth
