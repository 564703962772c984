// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#include "reductions.hpp"

#include <algorithm>
#include <unordered_map>

#include "errors.hpp"

namespace visync {

namespace {

struct MaskVia {
  std::uint32_t parent;
  LetterIdx letter;
};

SubsetResult mask_search(const Dfa& d, std::uint32_t start,
                         bool (*is_goal)(std::uint32_t, std::uint32_t),
                         std::uint32_t goal_arg) {
  const std::uint32_t n = d.nstates(), na = d.nletters();
  SubsetResult res;
  std::unordered_map<std::uint32_t, MaskVia> via;
  std::vector<std::uint32_t> queue{start};
  via.emplace(start, MaskVia{kNone, 0});
  for (std::size_t at = 0; at < queue.size(); ++at) {
    std::uint32_t mask = queue[at];
    if (is_goal(mask, goal_arg)) {
      Word w;
      for (std::uint32_t cur = mask; via.at(cur).parent != kNone;
           cur = via.at(cur).parent)
        w.push_back(via.at(cur).letter);
      std::reverse(w.begin(), w.end());
      res.yes = true;
      res.word = std::move(w);
      return res;
    }
    for (std::uint32_t a = 0; a < na; ++a) {
      std::uint32_t img = 0;
      for (std::uint32_t q = 0; q < n; ++q)
        if (mask & (1u << q)) img |= 1u << d.next(q, a);
      if (via.emplace(img, MaskVia{mask, a}).second) queue.push_back(img);
    }
  }
  return res;
}

std::uint32_t subset_mask(const Dfa& d) {
  std::uint32_t mask = 0;
  for (StateIdx s : d.subset) mask |= 1u << s;
  return mask;
}

void check_solver_input(const Dfa& d) {
  require_valid(d);
  if (d.nstates() > kSubsetSolverMaxStates)
    throw BudgetError("subset solver supports at most " +
                          std::to_string(kSubsetSolverMaxStates) + " states",
                      d.nstates());
}

void check_reduction_input(const Dfa& d, std::initializer_list<const char*> fresh) {
  require_valid(d);
  if (d.subset.empty())
    throw ArgumentError("reduction input needs a non-empty designated subset");
  for (const char* f : fresh)
    for (const auto& nm : d.letter_names)
      if (nm == f)
        throw NameCollisionError("input letter '" + nm +
                                 "' collides with generated letter name");
}

}  // namespace

SubsetResult solve_into_subset(const Dfa& d) {
  check_solver_input(d);
  std::uint32_t full = d.nstates() >= 32 ? 0xffffffffu : (1u << d.nstates()) - 1;
  return mask_search(
      d, full, [](std::uint32_t mask, std::uint32_t smask) { return (mask & ~smask) == 0; },
      subset_mask(d));
}

SubsetResult solve_from_subset(const Dfa& d) {
  check_solver_input(d);
  if (d.subset.empty()) return {};  // empty image never becomes a singleton
  return mask_search(
      d, subset_mask(d),
      [](std::uint32_t mask, std::uint32_t) {
        return mask != 0 && (mask & (mask - 1)) == 0;
      },
      0);
}

Dvpda reduce_into_subset_to_same(const Dfa& d) {
  check_reduction_input(d, {"a"});
  const std::uint32_t n = d.nstates(), na = d.nletters();
  const StateIdx q_all = n;  // the merge sink reached from the subset
  Dvpda m;
  m.state_names = numeric_names(n + 1);
  m.sym_names = {"BOT", "SMILE", "FROWN"};
  const SymIdx smile = 1, frown = 2;
  m.ab = make_alphabet({"a"}, d.letter_names, {});

  m.call_target.assign(n + 1, kNone);
  m.call_push.assign(n + 1, kNone);
  for (StateIdx q = 0; q < n; ++q) {
    bool in_subset = std::binary_search(d.subset.begin(), d.subset.end(), q);
    m.call_target[q] = in_subset ? q_all : q;
    m.call_push[q] = in_subset ? smile : frown;
  }
  m.call_target[q_all] = q_all;
  m.call_push[q_all] = smile;

  m.int_target.assign(static_cast<std::size_t>(n + 1) * na, kNone);
  for (StateIdx q = 0; q < n; ++q)
    for (std::uint32_t a = 0; a < na; ++a) m.int_target[q * na + a] = d.next(q, a);
  for (std::uint32_t a = 0; a < na; ++a) m.int_target[q_all * na + a] = q_all;
  return m;
}

Dvpda reduce_from_subset_to_arb(const Dfa& d) {
  check_reduction_input(d, {"r"});
  const std::uint32_t n = d.nstates(), na = d.nletters();
  Dvpda m;
  m.state_names = numeric_names(n);
  m.sym_names.push_back("BOT");
  for (StateIdx q = 0; q < n; ++q) m.sym_names.push_back("q" + std::to_string(q));
  m.ab = make_alphabet(d.letter_names, {}, {"r"});

  // Calls follow the DFA and record their source state on the stack.
  m.call_target.assign(static_cast<std::size_t>(n) * na, kNone);
  m.call_push.assign(static_cast<std::size_t>(n) * na, kNone);
  for (StateIdx q = 0; q < n; ++q)
    for (std::uint32_t a = 0; a < na; ++a) {
      m.call_target[q * na + a] = d.next(q, a);
      m.call_push[q * na + a] = 1 + q;
    }

  // The return undoes the recorded step; on the bottom marker it funnels
  // everything into the designated subset.
  const StateIdx anchor = d.subset.front();
  const std::uint32_t ns = n + 1;
  m.ret_target.assign(static_cast<std::size_t>(n) * ns, kNone);
  for (StateIdx q = 0; q < n; ++q) {
    bool in_subset = std::binary_search(d.subset.begin(), d.subset.end(), q);
    m.ret_target[q * ns + kBottom] = in_subset ? q : anchor;
    for (StateIdx p = 0; p < n; ++p) m.ret_target[q * ns + 1 + p] = p;
  }
  return m;
}

Dvpda reduce_into_subset_to_nturn_dvca(const Dfa& d, std::uint32_t n_turns) {
  if (n_turns < 1)
    throw ArgumentError("the counter construction needs a turn bound of at least 1");
  check_reduction_input(d, {"a", "b"});
  const std::uint32_t n = d.nstates(), na = d.nletters();
  // States: the DFA's, then the sink, then a stall chain of length n_turns+1.
  const StateIdx q_sync = n;
  auto stall = [n](std::uint32_t i) { return n + 1 + i; };
  const std::uint32_t total = n + 2 + n_turns;
  const StateIdx rescue = 0;  // any fixed DFA state works as the escape target

  Dvpda m;
  m.state_names = numeric_names(total);
  m.sym_names = {"BOT", "1"};
  const SymIdx one = 1;
  m.ab = make_alphabet({"a"}, d.letter_names, {"b"});

  auto in_subset = [&d](StateIdx q) {
    return std::binary_search(d.subset.begin(), d.subset.end(), q);
  };

  m.call_target.assign(total, kNone);
  m.call_push.assign(total, one);
  for (StateIdx q = 0; q < n; ++q) m.call_target[q] = in_subset(q) ? stall(0) : q;
  m.call_target[q_sync] = q_sync;
  for (std::uint32_t i = 0; i < n_turns; ++i) m.call_target[stall(i)] = stall(i);
  m.call_target[stall(n_turns)] =
      n_turns % 2 == 0 ? q_sync : stall(n_turns);

  m.int_target.assign(static_cast<std::size_t>(total) * na, kNone);
  for (StateIdx q = 0; q < n; ++q)
    for (std::uint32_t a = 0; a < na; ++a) m.int_target[q * na + a] = d.next(q, a);
  for (StateIdx q = n; q < total; ++q)
    for (std::uint32_t a = 0; a < na; ++a) m.int_target[q * na + a] = q;

  m.ret_target.assign(static_cast<std::size_t>(total) * 2, kNone);
  auto set_ret = [&m](StateIdx q, SymIdx g, StateIdx t) { m.ret_target[q * 2 + g] = t; };
  for (StateIdx q = 0; q < n; ++q) {
    set_ret(q, kBottom, q);
    set_ret(q, one, q);
  }
  set_ret(q_sync, kBottom, q_sync);
  set_ret(q_sync, one, q_sync);
  for (std::uint32_t i = 0; i < n_turns; ++i) {
    if (i % 2 == 0) {
      set_ret(stall(i), one, stall(i + 1));
      set_ret(stall(i), kBottom, rescue);
    } else {
      set_ret(stall(i), one, rescue);
      set_ret(stall(i), kBottom, stall(i + 1));
    }
  }
  if (n_turns % 2 == 0) {
    set_ret(stall(n_turns), one, rescue);
    set_ret(stall(n_turns), kBottom, rescue);
  } else {
    set_ret(stall(n_turns), one, rescue);
    set_ret(stall(n_turns), kBottom, q_sync);
  }
  return m;
}

Dvpda reduce_from_subset_to_zero_turn(const Dfa& d) {
  check_reduction_input(d, {"b"});
  const std::uint32_t n = d.nstates(), na = d.nletters();
  Dvpda m;
  m.state_names = numeric_names(n);
  m.sym_names = {"BOT", "1"};
  m.ab = make_alphabet(d.letter_names, {}, {"b"});

  m.call_target.assign(static_cast<std::size_t>(n) * na, kNone);
  m.call_push.assign(static_cast<std::size_t>(n) * na, 1);
  for (StateIdx q = 0; q < n; ++q)
    for (std::uint32_t a = 0; a < na; ++a) m.call_target[q * na + a] = d.next(q, a);

  const StateIdx anchor = d.subset.front();
  m.ret_target.assign(static_cast<std::size_t>(n) * 2, kNone);
  for (StateIdx q = 0; q < n; ++q) {
    bool in_subset = std::binary_search(d.subset.begin(), d.subset.end(), q);
    m.ret_target[q * 2 + kBottom] = in_subset ? q : anchor;
    m.ret_target[q * 2 + 1] = q;
  }
  return m;
}

Dvpda generate_reduction(const Dfa& d, const std::string& token,
                         std::optional<std::uint32_t> turns) {
  if (token == "thm8") {
    if (!turns)
      throw ArgumentError("generator 'thm8' needs a turn bound (--turns, at least 1)");
    return reduce_into_subset_to_nturn_dvca(d, *turns);
  }
  if (turns)
    throw ArgumentError("generator '" + token + "' does not take a turn bound");
  if (token == "thm2") return reduce_into_subset_to_same(d);
  if (token == "thm3") return reduce_from_subset_to_arb(d);
  if (token == "thm10") return reduce_from_subset_to_zero_turn(d);
  throw ArgumentError("unknown generator '" + token +
                      "' (expected thm2, thm3, thm8 or thm10)");
}

}  // namespace visync
