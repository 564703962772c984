// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "automaton.hpp"

namespace visync {

/// Answer to one of the two DFA subset problems, with the lexicographically
/// least among the shortest solution words (letters index d.letter_names).
struct SubsetResult {
  bool yes = false;
  Word word;
};

inline constexpr std::uint32_t kSubsetSolverMaxStates = 12;

/// Is there a word driving the image of the full state set inside d.subset?
/// Exact subset-lattice search; throws BudgetError above 12 states.
SubsetResult solve_into_subset(const Dfa& d);

/// Is there a word mapping every state of d.subset to one common state?
SubsetResult solve_from_subset(const Dfa& d);

/// The four hardness constructions. Each consumes a DFA with a non-empty
/// designated subset (ArgumentError otherwise) and emits a stack automaton
/// whose synchronization question mirrors the subset problem:
///   reduce_into_subset_to_same:       equal-stacks model, no bound
///   reduce_from_subset_to_arb:        arbitrary-stacks model, no bound
///   reduce_into_subset_to_nturn_dvca: counter automaton, n-turn bound (n >= 1)
///   reduce_from_subset_to_zero_turn:  equal- or arbitrary-stacks, 0-turn bound
/// Fresh letters collide with DFA letter names -> NameCollisionError.
Dvpda reduce_into_subset_to_same(const Dfa& d);
Dvpda reduce_from_subset_to_arb(const Dfa& d);
Dvpda reduce_into_subset_to_nturn_dvca(const Dfa& d, std::uint32_t n);
Dvpda reduce_from_subset_to_zero_turn(const Dfa& d);

/// Dispatches on the generator token ("thm2", "thm3", "thm8", "thm10").
/// "thm8" requires `turns` >= 1; the other tokens reject `turns`.
/// Unknown tokens raise ArgumentError.
Dvpda generate_reduction(const Dfa& d, const std::string& token,
                         std::optional<std::uint32_t> turns);

}  // namespace visync
