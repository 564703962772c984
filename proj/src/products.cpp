// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#include "products.hpp"

#include <cassert>

namespace visync {

// ---------------------------------------------------------------------------
// PairProduct

StateIdx PairProduct::pair_state(StateIdx p, StateIdx q) {
  return states_.intern({0, p, q});
}

StateIdx PairProduct::merged_state(StateIdx p) { return states_.intern({1, p}); }

SymIdx PairProduct::pair_sym(SymIdx g1, SymIdx g2) {
  return syms_.intern({g1, g2}) + 1;  // 0 stays the bottom marker
}

StateIdx PairProduct::int_successor(StateIdx s, std::uint32_t i) {
  const auto& key = states_.key(s);
  if (key[0] == 1) return merged_state(m_.int_next(key[1], i));
  return pair_state(m_.int_next(key[1], i), m_.int_next(key[2], i));
}

std::pair<StateIdx, SymIdx> PairProduct::call_successor(StateIdx s, std::uint32_t c) {
  const auto& key = states_.key(s);
  if (key[0] == 1) {
    StateIdx t = m_.call_next(key[1], c);
    SymIdx g = m_.call_sym(key[1], c);
    return {merged_state(t), pair_sym(g, g)};
  }
  StateIdx p = key[1], q = key[2];
  return {pair_state(m_.call_next(p, c), m_.call_next(q, c)),
          pair_sym(m_.call_sym(p, c), m_.call_sym(q, c))};
}

StateIdx PairProduct::ret_successor(StateIdx s, std::uint32_t r, SymIdx top) {
  const auto& key = states_.key(s);
  if (key[0] == 1) {
    StateIdx p = key[1];
    if (top == kBottom) return merged_state(m_.ret_next(p, r, kBottom));
    const auto& gs = syms_.key(top - 1);
    assert(gs[0] == gs[1] && "merged copy only ever pops symbols it pushed");
    return merged_state(m_.ret_next(p, r, gs[0]));
  }
  StateIdx p = key[1], q = key[2];
  if (top == kBottom) {
    // Zero test: from a diagonal pair with empty stacks, a return letter
    // witnesses synchronization and enters the merged copy.
    if (p == q) return merged_state(m_.ret_next(p, r, kBottom));
    return pair_state(m_.ret_next(p, r, kBottom), m_.ret_next(q, r, kBottom));
  }
  const auto& gs = syms_.key(top - 1);
  return pair_state(m_.ret_next(p, r, gs[0]), m_.ret_next(q, r, gs[1]));
}

bool PairProduct::is_accepting(StateIdx s) { return states_.key(s)[0] == 1; }

// ---------------------------------------------------------------------------
// TupleProduct

TupleProduct::TupleProduct(const Dvpda& m, SyncModel model,
                           std::optional<std::uint32_t> turn_bound)
    : m_(m),
      model_(model),
      cap_(turn_bound ? std::optional<std::uint32_t>(*turn_bound + 1) : std::nullopt),
      augmented_(model == SyncModel::Same),
      k_(m.nstates()) {}

StateIdx TupleProduct::tuple_state(std::uint32_t index, const std::vector<StateIdx>& comps) {
  std::vector<std::uint32_t> key;
  key.reserve(comps.size() + 2);
  key.push_back(kTuple);
  key.push_back(index);
  key.insert(key.end(), comps.begin(), comps.end());
  return states_.intern(key);
}

StateIdx TupleProduct::special(std::uint32_t kind) { return states_.intern({kind}); }

SymIdx TupleProduct::tuple_sym(const std::vector<SymIdx>& comps) {
  return syms_.intern(comps) + 1;
}

SymIdx TupleProduct::dummy_sym() {
  // Trap states still need to push something; any fixed non-bottom symbol
  // tuple works. m has a call letter whenever this is used, so symbol 1
  // exists (validation forbids pushing the bottom marker).
  return tuple_sym(std::vector<SymIdx>(k_, 1));
}

StateIdx TupleProduct::initial_state() {
  std::vector<StateIdx> comps(k_);
  for (std::uint32_t j = 0; j < k_; ++j) comps[j] = j;
  return tuple_state(0, comps);
}

StateIdx TupleProduct::int_successor(StateIdx s, std::uint32_t i) {
  const auto key = states_.key(s);  // copy: interning may reallocate
  if (key[0] != kTuple) return special(key[0] == kFin ? kFin : kFail);
  std::vector<StateIdx> comps(key.begin() + 2, key.end());
  for (auto& q : comps) q = m_.int_next(q, i);
  return tuple_state(key[1], comps);
}

std::pair<StateIdx, SymIdx> TupleProduct::call_successor(StateIdx s, std::uint32_t c) {
  const auto key = states_.key(s);
  if (key[0] != kTuple)
    return {special(key[0] == kFin ? kFin : kFail), dummy_sym()};
  std::uint32_t index = key[1];
  if (cap_) {
    if (index == *cap_) {
      if (*cap_ % 2 == 0) return {special(kFail), dummy_sym()};
      // odd cap: the up-stroke continues, index unchanged
    } else if (index % 2 == 0) {
      ++index;
    }
  }
  std::vector<StateIdx> comps(key.begin() + 2, key.end());
  std::vector<SymIdx> push(k_);
  for (std::uint32_t j = 0; j < k_; ++j) {
    push[j] = m_.call_sym(comps[j], c);
    comps[j] = m_.call_next(comps[j], c);
  }
  return {tuple_state(index, comps), tuple_sym(push)};
}

StateIdx TupleProduct::ret_successor(StateIdx s, std::uint32_t r, SymIdx top) {
  const auto key = states_.key(s);
  const bool fresh = augmented_ && r == m_.ab.nret();

  if (key[0] == kFin) return special(kFin);
  if (key[0] == kFail) return special(kFail);
  if (key[0] == kCheck) {
    if (!fresh) return special(kFail);
    if (top == kBottom) return special(kFin);
    const auto& gs = syms_.key(top - 1);
    for (std::uint32_t j = 1; j < k_; ++j)
      if (gs[j] != gs[0]) return special(kFail);
    return special(kCheck);
  }

  // Tuple states.
  std::vector<StateIdx> comps(key.begin() + 2, key.end());
  if (fresh) {
    for (std::uint32_t j = 1; j < k_; ++j)
      if (comps[j] != comps[0]) return special(kFail);
    if (top == kBottom) return special(kFin);
    const auto& gs = syms_.key(top - 1);
    for (std::uint32_t j = 1; j < k_; ++j)
      if (gs[j] != gs[0]) return special(kFail);
    return special(kCheck);
  }

  std::uint32_t index = key[1];
  if (top == kBottom) {
    for (auto& q : comps) q = m_.ret_next(q, r, kBottom);
    return tuple_state(index, comps);
  }
  if (cap_) {
    if (index == *cap_) {
      if (*cap_ % 2 == 1) return special(kFail);
      // even cap: the down-stroke continues, index unchanged
    } else if (index % 2 == 1) {
      ++index;
    } else if (index == 0) {
      return special(kFail);  // unreachable: popping needs an earlier call
    }
  }
  const auto& gs = syms_.key(top - 1);
  for (std::uint32_t j = 0; j < k_; ++j) comps[j] = m_.ret_next(comps[j], r, gs[j]);
  return tuple_state(index, comps);
}

bool TupleProduct::is_accepting(StateIdx s) {
  const auto& key = states_.key(s);
  if (augmented_) return key[0] == kFin;
  if (key[0] != kTuple) return false;
  for (std::size_t j = 3; j < key.size(); ++j)
    if (key[j] != key[2]) return false;
  return true;
}

}  // namespace visync
