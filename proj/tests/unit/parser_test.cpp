// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#include "parser.hpp"

#include <string>

#include "doctest.h"
#include "errors.hpp"
#include "support.hpp"

using namespace visync;
using testsupport::load_fixture;
using testsupport::make_m1;

TEST_CASE("the running example parses into the expected tables") {
  ParsedObject obj = load_fixture("m1.dvpda");
  REQUIRE(std::holds_alternative<Dvpda>(obj));
  const Dvpda& m = std::get<Dvpda>(obj);
  Dvpda want = make_m1();
  CHECK(m.state_names == want.state_names);
  CHECK(m.sym_names == want.sym_names);
  CHECK(m.ab.names == want.ab.names);
  CHECK(m.call_target == want.call_target);
  CHECK(m.call_push == want.call_push);
  CHECK(m.int_target == want.int_target);
  CHECK(m.ret_target == want.ret_target);
  CHECK_FALSE(m.initial.has_value());
  CHECK(m.finals.empty());
  CHECK(validate(m).empty());
}

TEST_CASE("automata round-trip through serialization") {
  ParsedObject obj = load_fixture("m1_lang.dvpda");
  const Dvpda& m = std::get<Dvpda>(obj);
  REQUIRE(m.initial.has_value());
  std::string text = serialize(m);
  Dvpda again = std::get<Dvpda>(parse_text(text));
  CHECK(again.state_names == m.state_names);
  CHECK(again.sym_names == m.sym_names);
  CHECK(again.ab.names == m.ab.names);
  CHECK(again.call_target == m.call_target);
  CHECK(again.call_push == m.call_push);
  CHECK(again.int_target == m.int_target);
  CHECK(again.ret_target == m.ret_target);
  CHECK(again.initial == m.initial);
  CHECK(again.finals == m.finals);
  CHECK(serialize(again) == text);
}

TEST_CASE("DFA files round-trip with their subset") {
  Dfa d = std::get<Dfa>(load_fixture("cerny3.dfa"));
  CHECK(d.nstates() == 3);
  CHECK(d.letter_names == std::vector<std::string>{"a", "b"});
  CHECK(d.subset == std::vector<StateIdx>{0, 1});
  CHECK(d.next(2, 1) == 0);
  Dfa again = std::get<Dfa>(parse_text(serialize(d)));
  CHECK(again.target == d.target);
  CHECK(again.subset == d.subset);
  CHECK(serialize(again) == serialize(d));
}

TEST_CASE("transducer files round-trip including silent outputs") {
  Vst t = std::get<Vst>(load_fixture("swap.vst"));
  CHECK(t.nstates() == 2);
  CHECK(t.in_names == std::vector<std::string>{"a", "b"});
  CHECK(t.out_names == std::vector<std::string>{"X", "Y"});
  CHECK(t.out(0, 0) == std::vector<std::uint32_t>{0});
  CHECK(t.out(1, 0) == std::vector<std::uint32_t>{1});
  CHECK(t.out(0, 1).empty());
  CHECK(t.next(0, 1) == 1);
  Vst again = std::get<Vst>(parse_text(serialize(t)));
  CHECK(again.target == t.target);
  CHECK(again.output == t.output);
  CHECK(serialize(again) == serialize(t));
}

TEST_CASE("comments and blank lines are ignored") {
  Dvpda m = std::get<Dvpda>(parse_text(
      "# heading\n\ndvpda # trailing\nstates 1\n\nints b # note\ni 0 b -> 0\n"));
  CHECK(m.nstates() == 1);
  CHECK(m.ab.nint() == 1);
  CHECK(validate(m).empty());
}

TEST_CASE("a dvpda without a stack line defaults to the bare marker") {
  Dvpda m = std::get<Dvpda>(parse_text("dvpda\nstates 1\nints b\ni 0 b -> 0\n"));
  CHECK(m.nsyms() == 1);
}

TEST_CASE("parse errors carry 1-based line numbers") {
  try {
    parse_text("dvpda\nstates 2\nints b\ni 0 b -> 5\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("line 4") == 0);
  }
}

TEST_CASE("malformed inputs are rejected") {
  CHECK_THROWS_AS(parse_text(""), ParseError);
  CHECK_THROWS_AS(parse_text("# only comments\n"), ParseError);
  CHECK_THROWS_AS(parse_text("pda\nstates 1\n"), ParseError);
  CHECK_THROWS_AS(parse_text("dvpda extra\nstates 1\n"), ParseError);
  CHECK_THROWS_AS(parse_text("dvpda\nints b\ni 0 b -> 0\n"), ParseError);  // missing states
  CHECK_THROWS_AS(parse_text("dvpda\nstates 1\nstates 1\n"), ParseError);
  CHECK_THROWS_AS(parse_text("dvpda\nstates x\n"), ParseError);
  CHECK_THROWS_AS(parse_text("dvpda\nstates 1\nbogus\n"), ParseError);
  CHECK_THROWS_AS(parse_text("dvpda\nstates 1\nints b\ni 0 b 0\n"), ParseError);
  CHECK_THROWS_AS(parse_text("dvpda\nstates 1\nints b\ni 0 c -> 0\n"), ParseError);
  CHECK_THROWS_AS(parse_text("dvpda\nstates 1\nints b\ni 0 b -> 0\ni 0 b -> 0\n"),
                  ParseError);  // duplicate row
  CHECK_THROWS_AS(parse_text("dvpda\nstates 1\ncalls a\nints b\nc 0 b -> 0 push X\n"),
                  ParseError);  // letter in the wrong class
  CHECK_THROWS_AS(parse_text("dvpda\nstates 1\nstack BOT X\ncalls a\nc 0 a -> 0 push Q\n"),
                  ParseError);  // unknown stack symbol
  CHECK_THROWS_AS(parse_text("dvpda\nstates 1048576\n"), ParseError);  // state cap
  CHECK_THROWS_AS(parse_text("dfa\nstates 2\nletters x\nt 0 x -> 1\nt 0 x -> 1\n"), ParseError);
  CHECK_THROWS_AS(parse_text("dfa\nstates 2\nletters x\nsubset 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_text("vst\nstates 1\nin a\nout XY\nt 0 a -> 0 emit X\n"),
                  ParseError);  // multi-character output symbol
  CHECK_THROWS_AS(parse_text("vst\nstates 1\nin a\nout X\nt 0 a -> 0 emit Z\n"), ParseError);
  CHECK_THROWS_AS(parse_text("vst\nstates 1\nin a\nout X\nt 0 a -> 0 X\n"), ParseError);
}

TEST_CASE("incomplete parsed tables surface as validation defects, not parse errors") {
  Dvpda m = std::get<Dvpda>(parse_text("dvpda\nstates 2\nints b\ni 0 b -> 0\n"));
  CHECK_FALSE(validate(m).empty());
}

TEST_CASE("vst files accept and ignore designated-state lines") {
  Vst t = std::get<Vst>(
      parse_text("vst\nstates 1\nin a\nout X\nt 0 a -> 0 emit X\ninitial 0\nfinals 0\n"));
  CHECK(t.nstates() == 1);
}

TEST_CASE("words map to letter indices and back") {
  Dvpda m = make_m1();
  Word w = word_from_names(m.ab, "a d b");
  CHECK(w == Word{0, 2, 1});
  CHECK(word_from_names(m.ab, "").empty());
  CHECK(word_from_names(m.ab, "   ").empty());
  CHECK_THROWS_AS(word_from_names(m.ab, "a q"), ArgumentError);
  CHECK(word_to_names(m.ab, w) == std::vector<std::string>{"a", "d", "b"});
  CHECK_THROWS_AS(word_to_names(m.ab, Word{9}), ArgumentError);
}
