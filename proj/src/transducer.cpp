// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#include "transducer.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "errors.hpp"

namespace visync {

std::vector<Diagnostic> validate(const Vst& t) {
  std::vector<Diagnostic> out;
  if (t.state_names.empty())
    out.push_back({DiagnosticKind::EmptyStateSet, "transducer has no states"});
  if (t.target.size() != static_cast<std::size_t>(t.nstates()) * t.nin() ||
      t.output.size() != t.target.size()) {
    out.push_back({DiagnosticKind::IncompleteTransition,
                   "transition tables do not cover every state/letter pair"});
    return out;
  }
  for (std::size_t i = 0; i < t.target.size(); ++i) {
    if (t.target[i] == kNone)
      out.push_back({DiagnosticKind::IncompleteTransition,
                     "missing transition at table slot " + std::to_string(i)});
    else if (t.target[i] >= t.nstates())
      out.push_back({DiagnosticKind::InvalidTarget,
                     "transition target out of range at slot " + std::to_string(i)});
    for (std::uint32_t o : t.output[i])
      if (o >= t.out_names.size())
        out.push_back({DiagnosticKind::InvalidTarget,
                       "output symbol out of range at slot " + std::to_string(i)});
  }
  for (std::size_t i = 0; i < t.in_names.size(); ++i)
    for (std::size_t j = i + 1; j < t.in_names.size(); ++j)
      if (t.in_names[i] == t.in_names[j])
        out.push_back({DiagnosticKind::DuplicateLetter,
                       "duplicate input letter '" + t.in_names[i] + "'"});
  for (std::size_t i = 0; i < t.out_names.size(); ++i) {
    if (t.out_names[i].size() != 1)
      out.push_back({DiagnosticKind::DuplicateStackSymbol,
                     "output symbol '" + t.out_names[i] + "' is not a single character"});
    for (std::size_t j = i + 1; j < t.out_names.size(); ++j)
      if (t.out_names[i] == t.out_names[j])
        out.push_back({DiagnosticKind::DuplicateStackSymbol,
                       "duplicate output symbol '" + t.out_names[i] + "'"});
  }
  return out;
}

void require_valid(const Vst& t) {
  auto diags = validate(t);
  if (!diags.empty()) throw ValidationError(diags);
}

VstClass classify_vst(const Vst& t) {
  VstClass cls;
  cls.visibly = true;
  cls.very_visibly = true;
  for (std::uint32_t a = 0; a < t.nin(); ++a) {
    const auto& first = t.out(0, a);
    for (StateIdx q = 1; q < t.nstates(); ++q) {
      const auto& cur = t.out(q, a);
      if (cur.size() != first.size()) cls.visibly = false;
      if (cur != first) cls.very_visibly = false;
    }
  }
  if (!cls.visibly) cls.very_visibly = false;
  return cls;
}

Dvpda vst_to_dvpda(const Vst& t, std::vector<std::uint32_t>* letter_map) {
  require_valid(t);
  if (!classify_vst(t).visibly)
    throw ArgumentError("trace synchronization needs a visibly transducer");

  // A letter is internal when every state emits the empty word on it; any
  // other letter pushes its output word, rendered as one stack symbol.
  std::vector<bool> silent(t.nin(), true);
  for (std::uint32_t a = 0; a < t.nin(); ++a)
    for (StateIdx q = 0; q < t.nstates() && silent[a]; ++q)
      if (!t.out(q, a).empty()) silent[a] = false;

  auto render = [&t](const std::vector<std::uint32_t>& w) {
    std::string s;
    for (std::uint32_t o : w) s += t.out_names[o];
    return s;
  };

  Dvpda m;
  m.state_names = t.state_names;
  m.sym_names.push_back("BOT");
  std::map<std::string, SymIdx> sym_of;
  for (std::uint32_t a = 0; a < t.nin(); ++a) {
    if (silent[a]) continue;
    for (StateIdx q = 0; q < t.nstates(); ++q) {
      std::string s = render(t.out(q, a));
      if (sym_of.emplace(s, static_cast<SymIdx>(m.sym_names.size())).second)
        m.sym_names.push_back(s);
    }
  }

  // Calls first, then internals, each keeping t's letter order.
  std::vector<std::uint32_t> call_src, int_src;
  for (std::uint32_t a = 0; a < t.nin(); ++a)
    (silent[a] ? int_src : call_src).push_back(a);
  std::vector<std::string> call_names, int_names;
  for (std::uint32_t a : call_src) call_names.push_back(t.in_names[a]);
  for (std::uint32_t a : int_src) int_names.push_back(t.in_names[a]);
  m.ab = make_alphabet(call_names, int_names, {});
  if (letter_map) {
    *letter_map = call_src;
    letter_map->insert(letter_map->end(), int_src.begin(), int_src.end());
  }

  const std::uint32_t n = t.nstates();
  m.call_target.assign(static_cast<std::size_t>(n) * call_src.size(), kNone);
  m.call_push.assign(static_cast<std::size_t>(n) * call_src.size(), kNone);
  m.int_target.assign(static_cast<std::size_t>(n) * int_src.size(), kNone);
  for (StateIdx q = 0; q < n; ++q) {
    for (std::size_t c = 0; c < call_src.size(); ++c) {
      std::uint32_t a = call_src[c];
      m.call_target[q * call_src.size() + c] = t.next(q, a);
      m.call_push[q * call_src.size() + c] = sym_of.at(render(t.out(q, a)));
    }
    for (std::size_t i = 0; i < int_src.size(); ++i)
      m.int_target[q * int_src.size() + i] = t.next(q, int_src[i]);
  }
  return m;
}

Decision trace_sync_vst(const Vst& t, std::uint64_t budget) {
  std::vector<std::uint32_t> letter_map;
  Dvpda m = vst_to_dvpda(t, &letter_map);
  Decision dec = decide_sync(m, SyncModel::Same, std::nullopt, budget);
  for (LetterIdx& a : dec.witness) a = letter_map[a];
  return dec;
}

Decision trace_sync_vvst(const Vst& t) {
  require_valid(t);
  if (!classify_vst(t).very_visibly)
    throw ArgumentError("shortcut needs a very visibly transducer");
  Dfa d;
  d.state_names = t.state_names;
  d.letter_names = t.in_names;
  d.target = t.target;
  Decision dec = dfa_pair_sync(d);
  dec.procedure = "vvst-dfa";
  return dec;
}

}  // namespace visync
