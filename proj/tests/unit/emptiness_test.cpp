// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#include "emptiness.hpp"

#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "parser.hpp"
#include "semantics.hpp"
#include "support.hpp"

using namespace visync;
namespace ts = visync::testsupport;

namespace {

EmptinessAnalysis analyze(ExplicitDvpda& impl, std::uint64_t budget = kDefaultBudget) {
  EmptinessAnalysis an(impl, budget);
  an.saturate();
  return an;
}

bool accepts(const Dvpda& m, const Word& w, AcceptanceMode mode) {
  Config end = run(m, m.initial.value_or(0), w);
  return m.is_final(end.state) &&
         (mode == AcceptanceMode::FinalState || end.stack_is_bottom_only());
}

}  // namespace

TEST_CASE("the running example's summary relation is total") {
  Dvpda m = ts::make_m1();
  ExplicitDvpda impl(m, AcceptanceMode::FinalState, 0, {});
  EmptinessAnalysis an = analyze(impl);
  for (StateIdx p = 0; p < 2; ++p)
    for (StateIdx q = 0; q < 2; ++q) CHECK(an.wm_contains(p, q));
  CHECK(an.pair_count() == 4);
  CHECK(an.state_count() == 2);

  std::vector<bool> naive = ts::naive_wm(m);
  std::vector<bool> brute = ts::enumerate_wm_pairs(m, 4);
  for (StateIdx p = 0; p < 2; ++p)
    for (StateIdx q = 0; q < 2; ++q) {
      CHECK(naive[p * 2 + q]);
      CHECK(brute[p * 2 + q]);
    }
}

TEST_CASE("the language fixture is non-empty with an empty witness") {
  Dvpda m = std::get<Dvpda>(ts::load_fixture("m1_lang.dvpda"));
  for (AcceptanceMode mode : {AcceptanceMode::FinalState, AcceptanceMode::FinalStateEmptyStack}) {
    EmptinessWitness w;
    CHECK_FALSE(is_language_empty(m, mode, kDefaultBudget, &w));
    CHECK(w.present);
    CHECK_FALSE(w.overflow);
    CHECK(w.word.empty());
    CHECK(w.length == 0);
  }
}

TEST_CASE("a non-initial start needs one merging letter") {
  Dvpda m = std::get<Dvpda>(ts::load_fixture("m1_lang.dvpda"));
  m.initial = 1;
  EmptinessWitness w;
  CHECK_FALSE(is_language_empty(m, AcceptanceMode::FinalStateEmptyStack, kDefaultBudget, &w));
  REQUIRE(w.present);
  CHECK(w.word == Word{1});  // internal b moves 1 -> 0
  CHECK(accepts(m, w.word, AcceptanceMode::FinalStateEmptyStack));
}

TEST_CASE("no finals means an empty language") {
  Dvpda m = std::get<Dvpda>(ts::load_fixture("m1_lang.dvpda"));
  m.finals.clear();
  CHECK(is_language_empty(m, AcceptanceMode::FinalState));
  CHECK(is_language_empty(m, AcceptanceMode::FinalStateEmptyStack));
}

TEST_CASE("emptiness needs a declared initial state") {
  Dvpda m = ts::make_m1();  // no initial
  CHECK_THROWS_AS(is_language_empty(m, AcceptanceMode::FinalState), ArgumentError);
}

TEST_CASE("bottom-reachable and reachable sets differ on a push-only chain") {
  Dvpda m = std::get<Dvpda>(parse_text(
      "dvpda\nstates 3\nstack BOT X\ncalls c\n"
      "c 0 c -> 1 push X\nc 1 c -> 2 push X\nc 2 c -> 2 push X\n"
      "initial 0\nfinals 2\n"));
  REQUIRE(validate(m).empty());
  CHECK_FALSE(is_language_empty(m, AcceptanceMode::FinalState));
  CHECK(is_language_empty(m, AcceptanceMode::FinalStateEmptyStack));

  ExplicitDvpda impl(m, AcceptanceMode::FinalState, 0, {2});
  EmptinessAnalysis an = analyze(impl);
  CHECK(an.in_bottom(0));
  CHECK_FALSE(an.in_bottom(1));
  CHECK_FALSE(an.in_bottom(2));
  CHECK(an.in_reach(0));
  CHECK(an.in_reach(1));
  CHECK(an.in_reach(2));

  EmptinessWitness w;
  is_language_empty(m, AcceptanceMode::FinalState, kDefaultBudget, &w);
  CHECK(w.word == Word{0, 0});  // two pushes to reach the final state
}

TEST_CASE("witness expansion respects the letter cap") {
  Dvpda m = std::get<Dvpda>(parse_text(
      "dvpda\nstates 3\nints x\n"
      "i 0 x -> 1\ni 1 x -> 2\ni 2 x -> 2\ninitial 0\nfinals 2\n"));
  ExplicitDvpda impl(m, AcceptanceMode::FinalState, 0, {2});
  EmptinessAnalysis an = analyze(impl);
  EmptinessWitness capped = an.witness(AcceptanceMode::FinalState, 1);
  CHECK(capped.present);
  CHECK(capped.overflow);
  CHECK(capped.length == 2);  // exact length survives the overflow
  EmptinessWitness full = an.witness(AcceptanceMode::FinalState);
  CHECK_FALSE(full.overflow);
  CHECK(full.word == Word{0, 0});
}

TEST_CASE("a tiny budget aborts saturation") {
  Dvpda m = ts::make_m1();
  m.initial = 0;
  m.finals = {0};
  CHECK_THROWS_AS(is_language_empty(m, AcceptanceMode::FinalState, 1), BudgetError);
}

TEST_CASE("random instances agree with the naive recomputation") {
  std::mt19937 rng(20260818);
  ts::DvpdaParams params;
  params.with_language = true;
  for (int trial = 0; trial < 120; ++trial) {
    Dvpda m = ts::random_dvpda(rng, params);
    REQUIRE(validate(m).empty());

    // Summary relation: engine == naive matrix fixpoint; enumeration gives a
    // sound subset.
    ExplicitDvpda impl(m, AcceptanceMode::FinalState, m.initial, m.finals);
    EmptinessAnalysis an = analyze(impl);
    std::vector<bool> naive = ts::naive_wm(m);
    std::vector<bool> brute = ts::enumerate_wm_pairs(m, 4);
    for (StateIdx p = 0; p < m.nstates(); ++p)
      for (StateIdx q = 0; q < m.nstates(); ++q) {
        CHECK(an.wm_contains(p, q) == naive[p * m.nstates() + q]);
        if (brute[p * m.nstates() + q]) CHECK(an.wm_contains(p, q));
      }

    for (AcceptanceMode mode :
         {AcceptanceMode::FinalState, AcceptanceMode::FinalStateEmptyStack}) {
      EmptinessWitness w;
      bool empty = is_language_empty(m, mode, kDefaultBudget, &w);
      CHECK(empty == ts::naive_language_empty(m, mode));
      CHECK(w.present == !empty);
      if (w.present && !w.overflow) CHECK(accepts(m, w.word, mode));
      ts::BruteSearch found = ts::brute_accepting_word(m, mode, 8);
      if (found.found) {
        CHECK_FALSE(empty);
        CHECK(accepts(m, found.word, mode));
      }
    }
  }
}
