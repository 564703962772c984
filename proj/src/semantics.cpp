// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#include "semantics.hpp"

#include "errors.hpp"

namespace visync {

const char* sync_model_name(SyncModel m) {
  switch (m) {
    case SyncModel::Empty: return "empty";
    case SyncModel::Same: return "same";
    case SyncModel::Arbitrary: return "arbitrary";
  }
  return "unknown";
}

void step(const Dvpda& m, Config& cfg, LetterIdx a) {
  if (a >= m.ab.size()) throw ArgumentError("letter index out of range");
  std::uint32_t k = m.ab.pos[a];
  switch (m.ab.kind[a]) {
    case LetterKind::Call: {
      SymIdx g = m.call_sym(cfg.state, k);
      cfg.state = m.call_next(cfg.state, k);
      cfg.stack.push_back(g);
      break;
    }
    case LetterKind::Internal:
      cfg.state = m.int_next(cfg.state, k);
      break;
    case LetterKind::Return: {
      SymIdx top = cfg.stack.back();
      cfg.state = m.ret_next(cfg.state, k, top);
      if (top != kBottom) cfg.stack.pop_back();
      break;
    }
  }
}

Config run(const Dvpda& m, StateIdx q0, const Word& w) {
  Config cfg;
  cfg.state = q0;
  for (LetterIdx a : w) step(m, cfg, a);
  return cfg;
}

std::vector<Config> simulate_all(const Dvpda& m, const Word& w) {
  std::vector<Config> out;
  out.reserve(m.nstates());
  for (StateIdx q = 0; q < m.nstates(); ++q) out.push_back(run(m, q, w));
  return out;
}

bool configs_synchronized(const std::vector<Config>& cfgs, SyncModel model) {
  if (cfgs.empty()) return true;
  const Config& first = cfgs[0];
  for (const Config& c : cfgs) {
    if (c.state != first.state) return false;
    switch (model) {
      case SyncModel::Empty:
        if (!c.stack_is_bottom_only()) return false;
        break;
      case SyncModel::Same:
        if (c.stack != first.stack) return false;
        break;
      case SyncModel::Arbitrary:
        break;
    }
  }
  return true;
}

std::uint32_t turn_count(const Dvpda& m, const Word& w) {
  std::uint32_t turns = 0;
  std::uint64_t height = 0;
  int last_sign = 0;
  for (LetterIdx a : w) {
    if (a >= m.ab.size()) throw ArgumentError("letter index out of range");
    int delta = 0;
    switch (m.ab.kind[a]) {
      case LetterKind::Call: delta = 1; break;
      case LetterKind::Return: delta = height > 0 ? -1 : 0; break;
      case LetterKind::Internal: break;
    }
    if (delta != 0) {
      if (last_sign != 0 && delta != last_sign) ++turns;
      last_sign = delta;
      height = static_cast<std::uint64_t>(static_cast<std::int64_t>(height) + delta);
    }
  }
  return turns;
}

bool check_witness(const Dvpda& m, const Word& w, SyncModel model,
                   std::optional<std::uint32_t> turn_bound) {
  if (turn_bound && turn_count(m, w) > *turn_bound) return false;
  return configs_synchronized(simulate_all(m, w), model);
}

}  // namespace visync
