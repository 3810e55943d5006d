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

#include <random>

#include "colexwidth/error.hpp"
#include "colexwidth/random_dfa.hpp"
#include "colexwidth/text_format.hpp"
#include "test_util.hpp"

namespace colexwidth {
namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_dfa(text);
  } catch (const FormatError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no FormatError for:\n" << text;
  return 0;
}

TEST(ParseDfa, ReadsFixture) {
  const Dfa a1 = testing::fixture("a1.dfa");
  EXPECT_EQ(a1.state_count(), 6u);
  EXPECT_EQ(a1.alphabet().symbols(), "abcdefghk");
  EXPECT_EQ(a1.transition_count(), 12u);
  EXPECT_EQ(a1.finals().size(), 6u);
}

TEST(ParseDfa, CommentsBlankLinesAndRepeatedFinals) {
  const Dfa dfa = parse_dfa(
      "# header\n"
      "\n"
      "alphabet: b a   # b comes first\n"
      "states: 2\n"
      "final: 1\n"
      "final:\n"
      "initial: 0\n"
      "trans: 0 a 1\r\n"
      "trans: 1 b 1\n");
  EXPECT_EQ(dfa.alphabet().rank('b'), 0u);
  EXPECT_EQ(dfa.finals(), std::vector<StateId>{1});
  EXPECT_TRUE(dfa.accepts("abb"));
}

TEST(ParseDfa, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("alphabet: a\nstates: 2\ninitial: 0\ntrans: 0 b 1\n"), 4u);
  EXPECT_EQ(error_line("alphabet: a\nstates: 2\ninitial: 0\ntrans: 0 a 5\n"), 4u);
  EXPECT_EQ(error_line("alphabet: a\nstates: 2\ninitial: 0\ntrans: 0 a 1\ntrans: 0 a 0\n"), 5u);
  EXPECT_EQ(error_line("alphabet: a\nstates: x\n"), 2u);
  EXPECT_EQ(error_line("alphabet: a a\n"), 1u);
  EXPECT_EQ(error_line("alphabet: ab\n"), 1u);
  EXPECT_EQ(error_line("alphabet: a\nbogus: 1\n"), 2u);
  EXPECT_EQ(error_line("alphabet: a\nstates 2\n"), 2u);
  EXPECT_EQ(error_line("alphabet: a\nstates: 1\ninitial: 0\nfinal: 3\n"), 4u);
  EXPECT_EQ(error_line("alphabet: a\nstates: 1\ninitial: 0\ntrans: 0 a\n"), 4u);
}

TEST(ParseDfa, MissingHeaders) {
  EXPECT_THROW(parse_dfa("states: 1\ninitial: 0\n"), FormatError);
  EXPECT_THROW(parse_dfa("alphabet: a\ninitial: 0\n"), FormatError);
  EXPECT_THROW(parse_dfa("alphabet: a\nstates: 1\n"), FormatError);
  EXPECT_THROW(parse_dfa("alphabet: a\nstates: 0\ninitial: 0\n"), FormatError);
  EXPECT_THROW(parse_dfa("alphabet: a\nstates: 2\ninitial: 2\n"), FormatError);
}

TEST(ParseDfa, MissingFile) {
  EXPECT_THROW(read_dfa_file("/nonexistent/x.dfa"), InputError);
}

TEST(SerializeDfa, CanonicalLayout) {
  const Dfa dfa = parse_dfa(
      "alphabet: b a\nstates: 2\ninitial: 1\nfinal: 1 0\ntrans: 1 a 0\ntrans: 0 a 1\n"
      "trans: 0 b 0\n");
  EXPECT_EQ(serialize_dfa(dfa),
            "alphabet: b a\nstates: 2\ninitial: 1\nfinal: 0 1\n"
            "trans: 0 b 0\ntrans: 0 a 1\ntrans: 1 a 0\n");
}

TEST(SerializeDfa, RoundTripsRandomAutomata) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 8);
    const std::size_t symbols = 1 + static_cast<std::size_t>(i % 4);
    const Dfa dfa = oracle::random_trim_dfa_retry({n, symbols, 0.5, 0.5}, rng);
    const std::string text = serialize_dfa(dfa);
    const Dfa back = parse_dfa(text);
    ASSERT_EQ(back, dfa) << text;
    ASSERT_EQ(serialize_dfa(back), text);
  }
}

TEST(SerializeDfa, RoundTripsNonTrimAutomata) {
  const Dfa dfa = testing::fixture("not_trim.dfa");
  EXPECT_EQ(parse_dfa(serialize_dfa(dfa)), dfa);
}

TEST(ChainSpec, ParsesBlocks) {
  const ChainPartition p = parse_chain_spec("0,1,4|2,3,5,6", 7);
  EXPECT_EQ(p.chain_count, 2u);
  EXPECT_EQ(p.chain_of, (std::vector<std::uint32_t>{0, 0, 1, 1, 0, 1, 1}));
  EXPECT_EQ(format_chain_spec(p), "0,1,4|2,3,5,6");
  EXPECT_EQ(format_chain_spec(parse_chain_spec(" 2 , 0 | 1 ", 3)), "0,2|1");
}

TEST(ChainSpec, RejectsMalformedSpecs) {
  EXPECT_THROW(parse_chain_spec("0,1|", 2), InputError);
  EXPECT_THROW(parse_chain_spec("0,x", 2), InputError);
  EXPECT_THROW(parse_chain_spec("0,1", 3), InputError);
  EXPECT_THROW(parse_chain_spec("0,1|1", 2), InputError);
  EXPECT_THROW(parse_chain_spec("0,2", 2), InputError);
}

}  // namespace
}  // namespace colexwidth
