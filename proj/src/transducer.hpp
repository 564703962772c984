// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "automaton.hpp"
#include "sync.hpp"

namespace visync {

/// Deterministic finite-state transducer: complete over its input alphabet,
/// each transition emits a (possibly empty) word over single-character output
/// symbols.
struct Vst {
  std::vector<std::string> state_names;
  std::vector<std::string> in_names;
  std::vector<std::string> out_names;            // each a single character
  std::vector<StateIdx> target;                  // [q * nin + a]
  std::vector<std::vector<std::uint32_t>> output;  // [q * nin + a], out symbol indices

  std::uint32_t nstates() const { return static_cast<std::uint32_t>(state_names.size()); }
  std::uint32_t nin() const { return static_cast<std::uint32_t>(in_names.size()); }
  StateIdx next(StateIdx q, std::uint32_t a) const { return target[q * nin() + a]; }
  const std::vector<std::uint32_t>& out(StateIdx q, std::uint32_t a) const {
    return output[q * nin() + a];
  }
};

std::vector<Diagnostic> validate(const Vst& t);
void require_valid(const Vst& t);

struct VstClass {
  bool visibly = false;       // all states emit outputs of equal length on each letter
  bool very_visibly = false;  // all states emit the identical word on each letter
};

VstClass classify_vst(const Vst& t);

/// Builds the stack automaton whose synchronization (equal-stacks model)
/// captures trace synchronization of a visibly transducer: letters with empty
/// outputs become internal, letters with non-empty outputs become calls that
/// push their output word as one stack symbol. Requires classify_vst(t).visibly,
/// else throws ArgumentError. When `letter_map` is non-null it receives, for
/// each letter of the returned automaton, the index of the originating input
/// letter of `t`.
Dvpda vst_to_dvpda(const Vst& t, std::vector<std::uint32_t>* letter_map = nullptr);

/// Decides whether some input word takes every state to one common state while
/// producing the same output string from every start state. Witness letters
/// index into t.in_names. Requires a visibly transducer (ArgumentError else).
Decision trace_sync_vst(const Vst& t, std::uint64_t budget = 0);

/// Shortcut for very-visibly transducers: outputs are state-independent, so
/// the question reduces to synchronizing the underlying input automaton.
Decision trace_sync_vvst(const Vst& t);

}  // namespace visync
