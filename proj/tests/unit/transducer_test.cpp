// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#include "transducer.hpp"

#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "parser.hpp"
#include "support.hpp"

using namespace visync;
namespace ts = visync::testsupport;

namespace {

Vst swap_fixture() { return std::get<Vst>(ts::load_fixture("swap.vst")); }

}  // namespace

TEST_CASE("classification of transducers") {
  Vst swp = swap_fixture();
  VstClass c = classify_vst(swp);
  CHECK(c.visibly);        // both states emit one symbol on a, nothing on b
  CHECK_FALSE(c.very_visibly);  // but different symbols on a

  Vst echo = swp;
  echo.output = {{0}, {}, {0}, {}};  // both states now emit X on a
  VstClass ce = classify_vst(echo);
  CHECK(ce.visibly);
  CHECK(ce.very_visibly);

  Vst skew = swp;
  skew.output = {{0, 0}, {}, {1}, {}};  // lengths 2 vs 1 on a
  VstClass cs = classify_vst(skew);
  CHECK_FALSE(cs.visibly);
  CHECK_FALSE(cs.very_visibly);
}

TEST_CASE("the stack encoding keeps letter classes and origins straight") {
  // Input letters declared emitting-second so the call letter ends up after
  // the internal one in the transducer but first in the automaton.
  Vst t = std::get<Vst>(parse_text(
      "vst\nstates 2\nin b a\nout X Y\n"
      "t 0 b -> 1 emit eps\nt 1 b -> 0 emit eps\n"
      "t 0 a -> 0 emit X\nt 1 a -> 0 emit Y\n"));
  REQUIRE(validate(t).empty());
  std::vector<std::uint32_t> letter_map;
  Dvpda m = vst_to_dvpda(t, &letter_map);
  REQUIRE(validate(m).empty());
  CHECK(m.ab.ncall() == 1);
  CHECK(m.ab.nint() == 1);
  CHECK(m.ab.nret() == 0);
  CHECK(m.ab.names == std::vector<std::string>{"a", "b"});
  CHECK(letter_map == std::vector<std::uint32_t>{1, 0});
  // Distinct emitted words become distinct stack symbols.
  CHECK(m.sym_names.size() == 3);
  CHECK(m.call_push[0] != m.call_push[1]);

  // The states stay an {0,1} pair under b, and the first a then emits X from
  // one run and Y from the other, so no word trace-synchronizes.
  Decision dec = trace_sync_vst(t);
  CHECK_FALSE(dec.answer);
  ts::BruteSearch sim = ts::simulate_trace_sync(t, 4);
  CHECK(dec.answer == sim.found);
}

TEST_CASE("non-visibly transducers are rejected") {
  Vst skew = swap_fixture();
  skew.output = {{0, 0}, {}, {1}, {}};
  CHECK_THROWS_AS(vst_to_dvpda(skew), ArgumentError);
  CHECK_THROWS_AS(trace_sync_vst(skew), ArgumentError);
}

TEST_CASE("the swapping transducer never trace-synchronizes") {
  Vst t = swap_fixture();
  Decision dec = trace_sync_vst(t);
  CHECK_FALSE(dec.answer);
  CHECK(dec.procedure == "zero-turn-same-reach");
  ts::BruteSearch sim = ts::simulate_trace_sync(t, 6);
  CHECK_FALSE(sim.found);
}

TEST_CASE("state-independent outputs reduce to plain synchronization") {
  Vst t = swap_fixture();
  t.output = {{0}, {}, {0}, {}};  // very visibly now
  t.target = {0, 1, 0, 0};       // a merges, b merges
  REQUIRE(classify_vst(t).very_visibly);
  Decision fast = trace_sync_vvst(t);
  CHECK(fast.answer);
  CHECK(fast.procedure == "vvst-dfa");
  CHECK(ts::check_trace_witness(t, fast.witness));
  Decision slow = trace_sync_vst(t);
  CHECK(slow.answer == fast.answer);
}

TEST_CASE("trace witnesses check under the definition") {
  Vst t = swap_fixture();
  CHECK(ts::check_trace_witness(t, {}) == false);  // two states, empty word
  // b a: states 0,1 -> 1,0 -> (a) 0,0; outputs: from 0: b emits eps, then a
  // from 1 emits Y; from 1: b emits eps, a from 0 emits X. Different traces.
  CHECK_FALSE(ts::check_trace_witness(t, {1, 0}));
}

TEST_CASE("random transducers agree with the word-by-word simulator") {
  std::mt19937 rng(332118);
  int decided_yes = 0, decided_no = 0;
  for (int trial = 0; trial < 120; ++trial) {
    Vst t = ts::random_visibly_vst(rng, 3, 2, 2, trial % 3 == 0);
    REQUIRE(validate(t).empty());
    REQUIRE(classify_vst(t).visibly);
    Decision dec = trace_sync_vst(t);
    ts::BruteSearch sim = ts::simulate_trace_sync(t, 5);
    if (sim.found) {
      CHECK(dec.answer);
      ++decided_yes;
    } else if (!dec.answer) {
      ++decided_no;
    }
    if (dec.answer && dec.witness_present) CHECK(ts::check_trace_witness(t, dec.witness));
    if (classify_vst(t).very_visibly) {
      CHECK(trace_sync_vvst(t).answer == dec.answer);
    }
  }
  CHECK(decided_yes > 0);
  CHECK(decided_no > 0);
}
