// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "automaton.hpp"
#include "emptiness.hpp"
#include "semantics.hpp"
#include "util.hpp"

namespace visync {

/// Product tracking two runs of the same automaton plus a merged single-run
/// copy. Pair states simulate componentwise; a return read on the bottom
/// marker at a diagonal pair (r,r) acts as a zero test and moves into the
/// merged copy (applying the single-run transition). Stack symbols are pairs;
/// the merged copy pushes (γ,γ). Accepting states are the merged copy: with
/// FinalStateEmptyStack acceptance, the language is non-empty iff the two
/// start states admit a common word after which both runs share one state
/// with stacks back to the bottom marker.
///
/// Letters coincide with the base automaton's (global indices included).
class PairProduct final : public ImplicitDvpda {
 public:
  PairProduct(const Dvpda& m, StateIdx p, StateIdx q) : m_(m), p0_(p), q0_(q) {}

  std::uint32_t call_count() const override { return m_.ab.ncall(); }
  std::uint32_t int_count() const override { return m_.ab.nint(); }
  std::uint32_t ret_count() const override { return m_.ab.nret(); }
  StateIdx initial_state() override { return pair_state(p0_, q0_); }
  StateIdx int_successor(StateIdx s, std::uint32_t i) override;
  std::pair<StateIdx, SymIdx> call_successor(StateIdx s, std::uint32_t c) override;
  StateIdx ret_successor(StateIdx s, std::uint32_t r, SymIdx top) override;
  bool is_accepting(StateIdx s) override;

 private:
  StateIdx pair_state(StateIdx p, StateIdx q);
  StateIdx merged_state(StateIdx p);
  SymIdx pair_sym(SymIdx g1, SymIdx g2);

  const Dvpda& m_;
  StateIdx p0_, q0_;
  VecInterner states_;
  VecInterner syms_;
};

/// |Q|-fold product with optional turn index and optional equal-stack
/// detector. States are tuples of base states; stack symbols are tuples of
/// base symbols. With a turn bound n, an index I ∈ {0..n+1} counts the
/// strokes used so far: calls bump an even index (or dead-end past the cap),
/// non-bottom returns bump an odd index, internals and bottom reads are
/// neutral.
///
/// Acceptance flavor per model: Arbitrary and Empty accept all-equal tuples
/// (the caller picks FinalState or FinalStateEmptyStack); Same appends one
/// fresh return letter after the base returns which checks, from an all-equal
/// tuple, that the stacks agree level by level, accepting in a dedicated
/// `fin` state (FinalState).
class TupleProduct final : public ImplicitDvpda {
 public:
  TupleProduct(const Dvpda& m, SyncModel model, std::optional<std::uint32_t> turn_bound);

  std::uint32_t call_count() const override { return m_.ab.ncall(); }
  std::uint32_t int_count() const override { return m_.ab.nint(); }
  std::uint32_t ret_count() const override { return m_.ab.nret() + (augmented_ ? 1 : 0); }
  StateIdx initial_state() override;
  StateIdx int_successor(StateIdx s, std::uint32_t i) override;
  std::pair<StateIdx, SymIdx> call_successor(StateIdx s, std::uint32_t c) override;
  StateIdx ret_successor(StateIdx s, std::uint32_t r, SymIdx top) override;
  bool is_accepting(StateIdx s) override;

  bool augmented() const { return augmented_; }

 private:
  enum : std::uint32_t { kTuple = 0, kCheck = 1, kFin = 2, kFail = 3 };

  StateIdx tuple_state(std::uint32_t index, const std::vector<StateIdx>& comps);
  StateIdx special(std::uint32_t kind);
  SymIdx tuple_sym(const std::vector<SymIdx>& comps);
  SymIdx dummy_sym();

  const Dvpda& m_;
  SyncModel model_;
  std::optional<std::uint32_t> cap_;  // n+1 when bounded
  bool augmented_;
  std::uint32_t k_;
  VecInterner states_;
  VecInterner syms_;
};

}  // namespace visync
