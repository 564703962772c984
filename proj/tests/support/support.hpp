// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "automaton.hpp"
#include "emptiness.hpp"
#include "parser.hpp"
#include "semantics.hpp"
#include "transducer.hpp"

namespace visync::testsupport {

// ---------------------------------------------------------------------------
// Fixtures.

/// Absolute path of a file under the fixture directory baked in at build time.
std::string fixture_path(const std::string& name);

std::string read_file(const std::string& path);

ParsedObject load_fixture(const std::string& name);

// ---------------------------------------------------------------------------
// Canned instances.

/// The two-state running example: call `a` pushes X (0 -> 1, 1 -> 1),
/// internal `b` swaps the states, return `d` merges on X and is the identity
/// on the bottom marker except 0 -> 0.
Dvpda make_m1();

/// Cyclic n-state automaton over letters a, b where a merges state 0 into 1
/// and b rotates; its shortest synchronizing word has length (n-1)^2.
Dfa make_cerny(std::uint32_t n);

// ---------------------------------------------------------------------------
// Random instances. All draws use `rng() % k` so the streams stay stable.

struct DvpdaParams {
  std::uint32_t max_states = 4;
  std::uint32_t max_calls = 1;
  std::uint32_t max_ints = 1;
  std::uint32_t max_rets = 1;
  std::uint32_t max_syms = 3;  // including the bottom marker
  bool force_call = false;
  bool force_return = false;
  bool forbid_call = false;
  bool forbid_return = false;
  bool very_visibly = false;   // pushed symbol chosen per letter, not per state
  bool with_language = false;  // also draw a random initial state and final set
};

Dvpda random_dvpda(std::mt19937& rng, const DvpdaParams& p);

/// Letters are drawn from x, y, z, u, v, w (never a, b or r, so the automaton
/// can feed every generator). With `with_subset`, a random non-empty subset is
/// attached.
Dfa random_dfa(std::mt19937& rng, std::uint32_t max_states, std::uint32_t max_letters,
               bool with_subset);

/// Random transducer satisfying the per-letter equal-output-length condition;
/// with `very`, all states share the letter's output word.
Vst random_visibly_vst(std::mt19937& rng, std::uint32_t max_states, std::uint32_t max_in,
                       std::uint32_t max_outlen, bool very);

// ---------------------------------------------------------------------------
// Independent brute-force oracles. These share no machinery with the library's
// engines: plain matrix fixpoints and word/config enumeration.

/// Naive summary relation as a boolean matrix [p * n + q]: least relation
/// containing the identity and closed under internal steps, call/return
/// wrapping and composition.
std::vector<bool> naive_wm(const Dvpda& m);

/// Pairs connected by an explicitly enumerated height-neutral word of length
/// at most `len` (every prefix has at least as many calls as returns, totals
/// equal). Always a subset of the full summary relation.
std::vector<bool> enumerate_wm_pairs(const Dvpda& m, std::uint32_t len);

/// Language emptiness recomputed from naive_wm plus set closures for the
/// bottom-reachable and reachable state sets.
bool naive_language_empty(const Dvpda& m, AcceptanceMode mode);

struct BruteSearch {
  bool found = false;
  Word word;  // lexicographically least among the shortest hits
};

/// Breadth-first accepting-word search from the initial configuration, words
/// up to `depth` letters (configurations deduplicated).
BruteSearch brute_accepting_word(const Dvpda& m, AcceptanceMode mode, std::uint32_t depth);

/// Exhaustive subset solvers over explicit state-set vectors (the library's
/// solvers use bit masks; these deliberately do not).
BruteSearch brute_into_subset(const Dfa& d);
BruteSearch brute_from_subset(const Dfa& d);

/// Adds one fresh return letter plus accept/trap states so that the language
/// under final-state acceptance is non-empty exactly when the input's language
/// under final-state-with-empty-stack acceptance is.
Dvpda final_empty_probe(const Dvpda& m);

/// Enumerates every input word up to `depth` in length-then-letter order and
/// simulates it from all states; found when some word sends every state to one
/// common state with identical outputs.
BruteSearch simulate_trace_sync(const Vst& t, std::uint32_t depth);

/// Definitional check of one candidate trace-synchronizing word.
bool check_trace_witness(const Vst& t, const Word& w);

}  // namespace visync::testsupport
