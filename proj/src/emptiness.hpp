// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "automaton.hpp"
#include "util.hpp"

namespace visync {

inline constexpr std::uint64_t kDefaultBudget = 2'000'000;

/// On-the-fly automaton interface for the saturation engine. States are dense
/// 32-bit ids assigned by the implementation (typically via an interner);
/// stack symbols are dense ids with 0 reserved for the bottom marker. Letters
/// are addressed per class by position; the engine converts them to global
/// indices (calls, then internals, then returns) when building witness words.
class ImplicitDvpda {
 public:
  virtual ~ImplicitDvpda() = default;

  virtual std::uint32_t call_count() const = 0;
  virtual std::uint32_t int_count() const = 0;
  virtual std::uint32_t ret_count() const = 0;

  /// State the bottom set starts from. May allocate the id on first use.
  virtual StateIdx initial_state() = 0;

  /// States to pre-discover before saturation; the default is the initial
  /// state only. Explicit automata seed every state so that summary pairs are
  /// available for all of them.
  virtual std::vector<StateIdx> seed_states() { return {initial_state()}; }

  virtual StateIdx int_successor(StateIdx q, std::uint32_t i) = 0;
  /// Returned symbol id is never 0 (calls cannot push the bottom marker).
  virtual std::pair<StateIdx, SymIdx> call_successor(StateIdx q, std::uint32_t c) = 0;
  /// top == 0 means the bottom marker is read (and not popped).
  virtual StateIdx ret_successor(StateIdx q, std::uint32_t r, SymIdx top) = 0;
  virtual bool is_accepting(StateIdx q) = 0;
};

enum class AcceptanceMode : std::uint8_t { FinalState = 0, FinalStateEmptyStack = 1 };

struct EmptinessWitness {
  bool present = false;   // some accepting word exists
  bool overflow = false;  // expansion exceeded the letter cap; `word` is unusable
  Word word;              // global letter indices of the implicit automaton
  std::uint64_t length = 0;  // exact length even when overflowed (saturating)
};

inline constexpr std::size_t kDefaultWitnessCap = 1'000'000;

/// Well-matched summary saturation over an implicit automaton, with
/// provenance for witness extraction.
///
/// WM is the least relation containing (q,q) for every discovered state and
/// closed under internal extension and call/return block extension; (p,q) is
/// in WM iff some word whose run returns to its starting stack height without
/// ever reading below it takes p to q. The bottom set B collects states
/// reachable from the initial state with stack exactly [bottom]; the reach
/// set additionally closes B under unmatched calls and WM steps.
class EmptinessAnalysis {
 public:
  EmptinessAnalysis(ImplicitDvpda& m, std::uint64_t budget = kDefaultBudget);

  /// Runs saturation to fixpoint. Throws BudgetError when the number of
  /// discovered states plus summary pairs exceeds the budget.
  void saturate();

  bool non_empty(AcceptanceMode mode) const;
  EmptinessWitness witness(AcceptanceMode mode,
                           std::size_t letter_cap = kDefaultWitnessCap) const;

  bool wm_contains(StateIdx p, StateIdx q) const;
  std::size_t pair_count() const { return pairs_.size(); }
  std::size_t state_count() const { return state_seen_.size(); }
  std::uint64_t explored() const { return units_; }
  const std::vector<StateIdx>& bottom_order() const { return bottom_order_; }
  bool in_bottom(StateIdx q) const { return q < bottom_.size() && bottom_[q]; }
  bool in_reach(StateIdx q) const { return q < reach_.size() && reach_[q]; }

 private:
  enum class PairKind : std::uint8_t { Base, IntExt, Block };
  struct PairNode {
    StateIdx p, q;
    PairKind kind;
    std::uint32_t letter = 0;      // IntExt: internal idx; Block: call idx
    std::uint32_t ret_letter = 0;  // Block only
    std::uint32_t left = 0;        // IntExt/Block: predecessor pair id
    std::uint32_t inner = 0;       // Block: inner pair id
  };
  enum class StepKind : std::uint8_t { Seed, Ret, Call, ViaPair };
  struct Step {
    StepKind kind;
    StateIdx pred = 0;
    std::uint32_t letter = 0;  // Ret: return idx; Call: call idx
    std::uint32_t pair = 0;    // ViaPair
  };
  struct CallCtx {
    StateIdx caller;
    std::uint32_t letter;  // call idx
    SymIdx sym;
  };
  struct Event {
    enum class Kind : std::uint8_t { State, Pair, Bottom, Reach } kind;
    std::uint32_t id;  // state id or pair id
  };

  void note_state(StateIdx q);
  std::uint32_t add_pair(StateIdx p, StateIdx q, PairNode node);
  void add_bottom(StateIdx q, Step how);
  void add_reach(StateIdx q, Step how);
  void spend();

  void process_state(StateIdx q);
  void process_pair(std::uint32_t id);
  void process_bottom(StateIdx s);
  void process_reach(StateIdx s);

  std::uint32_t global_call(std::uint32_t c) const { return c; }
  std::uint32_t global_int(std::uint32_t i) const { return m_.call_count() + i; }
  std::uint32_t global_ret(std::uint32_t r) const {
    return m_.call_count() + m_.int_count() + r;
  }

  ImplicitDvpda& m_;
  std::uint64_t budget_;
  std::uint64_t units_ = 0;
  bool saturated_ = false;

  std::vector<bool> state_seen_;
  std::vector<bool> accepting_;
  std::vector<bool> bottom_;
  std::vector<bool> reach_;
  std::vector<Step> bottom_how_;  // by state id, valid when bottom_
  std::vector<Step> reach_how_;   // by state id, valid when reach_
  std::vector<StateIdx> bottom_order_;
  std::vector<StateIdx> reach_order_;

  std::vector<PairNode> pairs_;
  std::unordered_map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t, PairU32Hash>
      pair_ids_;
  std::vector<std::vector<std::uint32_t>> by_left_;
  std::vector<std::vector<std::uint32_t>> by_right_;
  std::vector<std::vector<CallCtx>> ctxs_by_callee_;
  std::vector<std::vector<std::pair<StateIdx, SymIdx>>> state_calls_;  // per state, per call idx

  std::deque<Event> queue_;
};

/// Convenience wrapper: explicit automaton as an implicit one. State and
/// symbol ids coincide with the automaton's own indices; every state is
/// seeded. `initial` falls back to state 0 when the automaton declares none.
class ExplicitDvpda final : public ImplicitDvpda {
 public:
  ExplicitDvpda(const Dvpda& m, AcceptanceMode /*unused*/, std::optional<StateIdx> initial,
                std::vector<StateIdx> accepting)
      : m_(m), initial_(initial.value_or(0)), accepting_(std::move(accepting)) {}

  std::uint32_t call_count() const override { return m_.ab.ncall(); }
  std::uint32_t int_count() const override { return m_.ab.nint(); }
  std::uint32_t ret_count() const override { return m_.ab.nret(); }
  StateIdx initial_state() override { return initial_; }
  std::vector<StateIdx> seed_states() override {
    std::vector<StateIdx> all(m_.nstates());
    for (StateIdx q = 0; q < m_.nstates(); ++q) all[q] = q;
    return all;
  }
  StateIdx int_successor(StateIdx q, std::uint32_t i) override { return m_.int_next(q, i); }
  std::pair<StateIdx, SymIdx> call_successor(StateIdx q, std::uint32_t c) override {
    return {m_.call_next(q, c), m_.call_sym(q, c)};
  }
  StateIdx ret_successor(StateIdx q, std::uint32_t r, SymIdx top) override {
    return m_.ret_next(q, r, top);
  }
  bool is_accepting(StateIdx q) override {
    return std::binary_search(accepting_.begin(), accepting_.end(), q);
  }

 private:
  const Dvpda& m_;
  StateIdx initial_;
  std::vector<StateIdx> accepting_;  // sorted
};

/// Language emptiness of an explicit automaton (uses `initial`/`finals`).
/// Returns true when no word is accepted. When non-empty and `witness_out` is
/// given, stores an accepting word.
bool is_language_empty(const Dvpda& m, AcceptanceMode mode,
                       std::uint64_t budget = kDefaultBudget,
                       EmptinessWitness* witness_out = nullptr);

}  // namespace visync
