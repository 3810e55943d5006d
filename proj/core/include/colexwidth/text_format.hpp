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

// Line-oriented DFA text format:
//
//   alphabet: a b c d     # declaration order is the co-lex symbol order
//   states: 4
//   initial: 0
//   final: 1 3
//   trans: 0 a 1
//
// '#' starts a comment. Keys may appear in any order after `alphabet:` and
// `states:`; `final:` and `trans:` may repeat.

#include <string>
#include <string_view>

#include "colexwidth/automaton.hpp"
#include "colexwidth/colex.hpp"

namespace colexwidth {

// Throws FormatError with the offending line.
Dfa parse_dfa(std::string_view text);
Dfa read_dfa_file(const std::string& path);

// Canonical text: finals ascending, transitions by (state, symbol order).
std::string serialize_dfa(const Dfa& dfa);

// "0,1,4|2,3,5,6": chains separated by '|', states by ','.
ChainPartition parse_chain_spec(std::string_view spec, std::size_t state_count);
std::string format_chain_spec(const ChainPartition& chains);

}  // namespace colexwidth
