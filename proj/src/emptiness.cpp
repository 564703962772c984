// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#include "emptiness.hpp"

#include <cassert>
#include <limits>

#include "errors.hpp"

namespace visync {

namespace {

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  constexpr std::uint64_t kCap = std::numeric_limits<std::uint64_t>::max() / 4;
  std::uint64_t s = a + b;
  return (s < a || s > kCap) ? kCap : s;
}

}  // namespace

EmptinessAnalysis::EmptinessAnalysis(ImplicitDvpda& m, std::uint64_t budget)
    : m_(m), budget_(budget == 0 ? kDefaultBudget : budget) {}

void EmptinessAnalysis::spend() {
  if (++units_ > budget_)
    throw BudgetError("exploration budget exceeded (" + std::to_string(budget_) +
                          " states and summary pairs)",
                      units_);
}

void EmptinessAnalysis::note_state(StateIdx q) {
  if (q < state_seen_.size() && state_seen_[q]) return;
  if (q >= state_seen_.size()) {
    std::size_t n = static_cast<std::size_t>(q) + 1;
    state_seen_.resize(n);
    accepting_.resize(n);
    bottom_.resize(n);
    reach_.resize(n);
    bottom_how_.resize(n);
    reach_how_.resize(n);
    by_left_.resize(n);
    by_right_.resize(n);
    ctxs_by_callee_.resize(n);
    state_calls_.resize(n);
  }
  state_seen_[q] = true;
  spend();
  queue_.push_back({Event::Kind::State, q});
}

std::uint32_t EmptinessAnalysis::add_pair(StateIdx p, StateIdx q, PairNode node) {
  auto key = std::make_pair(p, q);
  auto it = pair_ids_.find(key);
  if (it != pair_ids_.end()) return it->second;
  note_state(p);
  note_state(q);
  spend();
  std::uint32_t id = static_cast<std::uint32_t>(pairs_.size());
  pairs_.push_back(node);
  pair_ids_.emplace(key, id);
  by_left_[p].push_back(id);
  by_right_[q].push_back(id);
  queue_.push_back({Event::Kind::Pair, id});
  return id;
}

void EmptinessAnalysis::add_bottom(StateIdx q, Step how) {
  note_state(q);
  if (bottom_[q]) return;
  bottom_[q] = true;
  bottom_how_[q] = how;
  bottom_order_.push_back(q);
  queue_.push_back({Event::Kind::Bottom, q});
}

void EmptinessAnalysis::add_reach(StateIdx q, Step how) {
  note_state(q);
  if (reach_[q]) return;
  reach_[q] = true;
  reach_how_[q] = how;
  reach_order_.push_back(q);
  queue_.push_back({Event::Kind::Reach, q});
}

void EmptinessAnalysis::process_state(StateIdx q) {
  accepting_[q] = m_.is_accepting(q);
  const std::uint32_t nc = m_.call_count();
  state_calls_[q].reserve(nc);
  for (std::uint32_t c = 0; c < nc; ++c) {
    auto [q1, g] = m_.call_successor(q, c);
    assert(g != kBottom && "calls must push a non-bottom symbol");
    note_state(q1);
    ctxs_by_callee_[q1].push_back({q, c, g});
    state_calls_[q].push_back({q1, g});  // re-index: note_state may reallocate
  }
  PairNode base;
  base.p = q;
  base.q = q;
  base.kind = PairKind::Base;
  add_pair(q, q, base);
}

void EmptinessAnalysis::process_pair(std::uint32_t id) {
  const StateIdx p = pairs_[id].p;
  const StateIdx q = pairs_[id].q;
  const std::uint32_t ni = m_.int_count(), nr = m_.ret_count(), nc = m_.call_count();

  // Internal extension: (p,q) --σi--> (p, δi(q,σi)).
  for (std::uint32_t i = 0; i < ni; ++i) {
    StateIdx q2 = m_.int_successor(q, i);
    PairNode n;
    n.p = p;
    n.q = q2;
    n.kind = PairKind::IntExt;
    n.letter = i;
    n.left = id;
    add_pair(p, q2, n);
  }

  // Block extension with this pair on the left: q --σc--> q1 (push γ),
  // inner (q1,q2) well-matched, q2 --σr on γ--> q3 gives (p,q3).
  if (nr > 0) {
    for (std::uint32_t c = 0; c < nc; ++c) {
      auto [q1, g] = state_calls_[q][c];
      std::size_t sz = by_left_[q1].size();
      for (std::size_t k = 0; k < sz; ++k) {
        std::uint32_t inner = by_left_[q1][k];
        StateIdx q2 = pairs_[inner].q;
        for (std::uint32_t r = 0; r < nr; ++r) {
          StateIdx q3 = m_.ret_successor(q2, r, g);
          PairNode n;
          n.p = p;
          n.q = q3;
          n.kind = PairKind::Block;
          n.letter = c;
          n.ret_letter = r;
          n.left = id;
          n.inner = inner;
          add_pair(p, q3, n);
        }
      }
    }

    // Block extension with this pair as the inner part: for every recorded
    // caller x --σc--> p (push γ) and every pair (o,x), derive (o, q3).
    std::size_t csz = ctxs_by_callee_[p].size();
    for (std::size_t k = 0; k < csz; ++k) {
      CallCtx ctx = ctxs_by_callee_[p][k];
      std::size_t rsz = by_right_[ctx.caller].size();
      for (std::size_t j = 0; j < rsz; ++j) {
        std::uint32_t leftp = by_right_[ctx.caller][j];
        StateIdx o = pairs_[leftp].p;
        for (std::uint32_t r = 0; r < nr; ++r) {
          StateIdx q3 = m_.ret_successor(q, r, ctx.sym);
          PairNode n;
          n.p = o;
          n.q = q3;
          n.kind = PairKind::Block;
          n.letter = ctx.letter;
          n.ret_letter = r;
          n.left = leftp;
          n.inner = id;
          add_pair(o, q3, n);
        }
      }
    }
  }

  if (bottom_[p] && !bottom_[q]) {
    Step s;
    s.kind = StepKind::ViaPair;
    s.pred = p;
    s.pair = id;
    add_bottom(q, s);
  }
  if (reach_[p] && !reach_[q]) {
    Step s;
    s.kind = StepKind::ViaPair;
    s.pred = p;
    s.pair = id;
    add_reach(q, s);
  }
}

void EmptinessAnalysis::process_bottom(StateIdx s) {
  {
    Step st;
    st.kind = StepKind::Seed;  // reach word = bottom word of s itself
    st.pred = s;
    add_reach(s, st);
  }
  const std::uint32_t nr = m_.ret_count();
  for (std::uint32_t r = 0; r < nr; ++r) {
    StateIdx t = m_.ret_successor(s, r, kBottom);
    Step st;
    st.kind = StepKind::Ret;
    st.pred = s;
    st.letter = r;
    add_bottom(t, st);
  }
  std::size_t sz = by_left_[s].size();
  for (std::size_t k = 0; k < sz; ++k) {
    std::uint32_t pid = by_left_[s][k];
    StateIdx t = pairs_[pid].q;
    if (bottom_[t]) continue;
    Step st;
    st.kind = StepKind::ViaPair;
    st.pred = s;
    st.pair = pid;
    add_bottom(t, st);
  }
}

void EmptinessAnalysis::process_reach(StateIdx s) {
  const std::uint32_t nc = m_.call_count();
  for (std::uint32_t c = 0; c < nc; ++c) {
    StateIdx t = state_calls_[s][c].first;
    Step st;
    st.kind = StepKind::Call;
    st.pred = s;
    st.letter = c;
    add_reach(t, st);
  }
  std::size_t sz = by_left_[s].size();
  for (std::size_t k = 0; k < sz; ++k) {
    std::uint32_t pid = by_left_[s][k];
    StateIdx t = pairs_[pid].q;
    if (reach_[t]) continue;
    Step st;
    st.kind = StepKind::ViaPair;
    st.pred = s;
    st.pair = pid;
    add_reach(t, st);
  }
}

void EmptinessAnalysis::saturate() {
  if (saturated_) return;
  for (StateIdx q : m_.seed_states()) note_state(q);
  {
    Step st;
    st.kind = StepKind::Seed;
    add_bottom(m_.initial_state(), st);
  }
  while (!queue_.empty()) {
    Event ev = queue_.front();
    queue_.pop_front();
    switch (ev.kind) {
      case Event::Kind::State: process_state(ev.id); break;
      case Event::Kind::Pair: process_pair(ev.id); break;
      case Event::Kind::Bottom: process_bottom(ev.id); break;
      case Event::Kind::Reach: process_reach(ev.id); break;
    }
  }
  saturated_ = true;
}

bool EmptinessAnalysis::non_empty(AcceptanceMode mode) const {
  const auto& order =
      mode == AcceptanceMode::FinalStateEmptyStack ? bottom_order_ : reach_order_;
  for (StateIdx q : order)
    if (accepting_[q]) return true;
  return false;
}

bool EmptinessAnalysis::wm_contains(StateIdx p, StateIdx q) const {
  return pair_ids_.find(std::make_pair(p, q)) != pair_ids_.end();
}

EmptinessWitness EmptinessAnalysis::witness(AcceptanceMode mode,
                                            std::size_t letter_cap) const {
  EmptinessWitness w;
  const auto& order =
      mode == AcceptanceMode::FinalStateEmptyStack ? bottom_order_ : reach_order_;
  StateIdx target = kNone;
  for (StateIdx q : order)
    if (accepting_[q]) {
      target = q;
      break;
    }
  if (target == kNone) return w;
  w.present = true;

  // Forward length pass; every record only references earlier records.
  std::vector<std::uint64_t> pair_len(pairs_.size(), 0);
  for (std::size_t id = 0; id < pairs_.size(); ++id) {
    const PairNode& n = pairs_[id];
    switch (n.kind) {
      case PairKind::Base: pair_len[id] = 0; break;
      case PairKind::IntExt: pair_len[id] = sat_add(pair_len[n.left], 1); break;
      case PairKind::Block:
        pair_len[id] = sat_add(sat_add(pair_len[n.left], pair_len[n.inner]), 2);
        break;
    }
  }
  std::vector<std::uint64_t> bottom_len(state_seen_.size(), 0);
  for (StateIdx q : bottom_order_) {
    const Step& st = bottom_how_[q];
    switch (st.kind) {
      case StepKind::Seed: bottom_len[q] = 0; break;
      case StepKind::Ret: bottom_len[q] = sat_add(bottom_len[st.pred], 1); break;
      case StepKind::ViaPair:
        bottom_len[q] = sat_add(bottom_len[st.pred], pair_len[st.pair]);
        break;
      case StepKind::Call: break;  // not used for bottom steps
    }
  }
  std::vector<std::uint64_t> reach_len;
  if (mode == AcceptanceMode::FinalState) {
    reach_len.assign(state_seen_.size(), 0);
    for (StateIdx q : reach_order_) {
      const Step& st = reach_how_[q];
      switch (st.kind) {
        case StepKind::Seed: reach_len[q] = bottom_len[st.pred]; break;
        case StepKind::Call: reach_len[q] = sat_add(reach_len[st.pred], 1); break;
        case StepKind::ViaPair:
          reach_len[q] = sat_add(reach_len[st.pred], pair_len[st.pair]);
          break;
        case StepKind::Ret: break;  // not used for reach steps
      }
    }
  }
  w.length = mode == AcceptanceMode::FinalStateEmptyStack ? bottom_len[target]
                                                          : reach_len[target];
  if (w.length > letter_cap) {
    w.overflow = true;
    return w;
  }

  // Expand the derivation iteratively.
  struct Task {
    enum class Kind : std::uint8_t { Emit, Pair, BottomOf, ReachOf } kind;
    std::uint32_t id;
  };
  std::vector<Task> stack;
  if (mode == AcceptanceMode::FinalStateEmptyStack)
    stack.push_back({Task::Kind::BottomOf, target});
  else
    stack.push_back({Task::Kind::ReachOf, target});
  w.word.reserve(static_cast<std::size_t>(w.length));
  while (!stack.empty()) {
    Task t = stack.back();
    stack.pop_back();
    switch (t.kind) {
      case Task::Kind::Emit:
        w.word.push_back(t.id);
        break;
      case Task::Kind::Pair: {
        const PairNode& n = pairs_[t.id];
        if (n.kind == PairKind::IntExt) {
          stack.push_back({Task::Kind::Emit, global_int(n.letter)});
          stack.push_back({Task::Kind::Pair, n.left});
        } else if (n.kind == PairKind::Block) {
          stack.push_back({Task::Kind::Emit, global_ret(n.ret_letter)});
          stack.push_back({Task::Kind::Pair, n.inner});
          stack.push_back({Task::Kind::Emit, global_call(n.letter)});
          stack.push_back({Task::Kind::Pair, n.left});
        }
        break;
      }
      case Task::Kind::BottomOf: {
        const Step& st = bottom_how_[t.id];
        if (st.kind == StepKind::Ret) {
          stack.push_back({Task::Kind::Emit, global_ret(st.letter)});
          stack.push_back({Task::Kind::BottomOf, st.pred});
        } else if (st.kind == StepKind::ViaPair) {
          stack.push_back({Task::Kind::Pair, st.pair});
          stack.push_back({Task::Kind::BottomOf, st.pred});
        }
        break;
      }
      case Task::Kind::ReachOf: {
        const Step& st = reach_how_[t.id];
        if (st.kind == StepKind::Seed) {
          stack.push_back({Task::Kind::BottomOf, st.pred});
        } else if (st.kind == StepKind::Call) {
          stack.push_back({Task::Kind::Emit, global_call(st.letter)});
          stack.push_back({Task::Kind::ReachOf, st.pred});
        } else if (st.kind == StepKind::ViaPair) {
          stack.push_back({Task::Kind::Pair, st.pair});
          stack.push_back({Task::Kind::ReachOf, st.pred});
        }
        break;
      }
    }
  }
  assert(w.word.size() == w.length);
  return w;
}

bool is_language_empty(const Dvpda& m, AcceptanceMode mode, std::uint64_t budget,
                       EmptinessWitness* witness_out) {
  if (!m.initial) throw ArgumentError("automaton declares no initial state");
  ExplicitDvpda impl(m, mode, m.initial, m.finals);
  EmptinessAnalysis an(impl, budget);
  an.saturate();
  bool nonempty = an.non_empty(mode);
  if (witness_out) {
    if (nonempty)
      *witness_out = an.witness(mode);
    else
      *witness_out = EmptinessWitness{};
  }
  return !nonempty;
}

}  // namespace visync
