// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "automaton.hpp"

namespace visync {

/// Models of agreement after reading a word from every state.
enum class SyncModel : std::uint8_t {
  Empty = 0,     // common state and every stack back to just the bottom marker
  Same = 1,      // common state and pairwise equal stacks
  Arbitrary = 2, // common state, stacks unconstrained
};

const char* sync_model_name(SyncModel m);

/// Run-time configuration. The stack always keeps the bottom marker at
/// index 0; returns read but never pop it.
struct Config {
  StateIdx state = 0;
  std::vector<SymIdx> stack{kBottom};

  bool stack_is_bottom_only() const { return stack.size() == 1; }
  bool operator==(const Config& o) const { return state == o.state && stack == o.stack; }
};

/// Applies one letter in place.
void step(const Dvpda& m, Config& cfg, LetterIdx a);

/// Runs a word from the given state with an empty stack.
Config run(const Dvpda& m, StateIdx q0, const Word& w);

/// Runs a word from every state with empty stacks.
std::vector<Config> simulate_all(const Dvpda& m, const Word& w);

/// Whether the given configurations agree under the model.
bool configs_synchronized(const std::vector<Config>& cfgs, SyncModel model);

/// Number of strict direction changes in the stack-height profile of the
/// word: the profile ignores internals and returns read on the bottom marker,
/// both of which leave the height unchanged. Independent of the start state.
std::uint32_t turn_count(const Dvpda& m, const Word& w);

/// Full witness check: simulates from all states, checks the agreement model,
/// and (when a bound is given) the turn budget.
bool check_witness(const Dvpda& m, const Word& w, SyncModel model,
                   std::optional<std::uint32_t> turn_bound = std::nullopt);

}  // namespace visync
