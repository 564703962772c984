// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#include "automaton.hpp"

#include <algorithm>
#include <unordered_set>

#include "errors.hpp"

namespace visync {

std::uint32_t PartitionedAlphabet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<std::uint32_t>(i);
  return kNone;
}

PartitionedAlphabet make_alphabet(const std::vector<std::string>& calls,
                                  const std::vector<std::string>& ints,
                                  const std::vector<std::string>& rets) {
  PartitionedAlphabet ab;
  auto add = [&ab](const std::vector<std::string>& names, LetterKind kind,
                   std::vector<LetterIdx>& slot) {
    for (const std::string& nm : names) {
      ab.pos.push_back(static_cast<std::uint32_t>(slot.size()));
      slot.push_back(static_cast<LetterIdx>(ab.names.size()));
      ab.names.push_back(nm);
      ab.kind.push_back(kind);
    }
  };
  add(calls, LetterKind::Call, ab.calls);
  add(ints, LetterKind::Internal, ab.ints);
  add(rets, LetterKind::Return, ab.rets);
  return ab;
}

std::vector<std::string> numeric_names(std::uint32_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

const char* diagnostic_kind_name(DiagnosticKind k) {
  switch (k) {
    case DiagnosticKind::EmptyStateSet: return "empty-state-set";
    case DiagnosticKind::BadPartition: return "bad-partition";
    case DiagnosticKind::DuplicateLetter: return "duplicate-letter";
    case DiagnosticKind::DuplicateStackSymbol: return "duplicate-stack-symbol";
    case DiagnosticKind::ReservedLetter: return "reserved-letter";
    case DiagnosticKind::IncompleteTransition: return "incomplete-transition";
    case DiagnosticKind::InvalidTarget: return "invalid-target";
    case DiagnosticKind::PushesBottom: return "pushes-bottom";
  }
  return "unknown";
}

bool Dvpda::is_final(StateIdx q) const {
  return std::binary_search(finals.begin(), finals.end(), q);
}

namespace {

void check_letter_names(const std::vector<std::string>& names, std::vector<Diagnostic>& out) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second)
      out.push_back({DiagnosticKind::DuplicateLetter, "letter '" + n + "' declared twice"});
    if (n == "__r")
      out.push_back({DiagnosticKind::ReservedLetter,
                     "letter name '__r' is reserved for generated return letters"});
  }
}

}  // namespace

std::vector<Diagnostic> validate(const Dvpda& m) {
  std::vector<Diagnostic> out;
  const std::uint32_t n = m.nstates();
  if (n == 0) out.push_back({DiagnosticKind::EmptyStateSet, "automaton has no states"});
  if (m.nsyms() == 0 || m.sym_names.empty())
    out.push_back({DiagnosticKind::DuplicateStackSymbol, "stack alphabet missing bottom marker"});

  // Letter partition consistency, including the class-contiguous global order
  // (calls, then internals, then returns) that the engines rely on.
  if (m.ab.kind.size() != m.ab.names.size() || m.ab.pos.size() != m.ab.names.size() ||
      m.ab.calls.size() + m.ab.ints.size() + m.ab.rets.size() != m.ab.names.size()) {
    out.push_back({DiagnosticKind::BadPartition, "letter partition tables are inconsistent"});
  } else {
    bool contiguous = true;
    for (std::size_t k = 0; k < m.ab.calls.size(); ++k)
      if (m.ab.calls[k] != k) contiguous = false;
    for (std::size_t k = 0; k < m.ab.ints.size(); ++k)
      if (m.ab.ints[k] != m.ab.calls.size() + k) contiguous = false;
    for (std::size_t k = 0; k < m.ab.rets.size(); ++k)
      if (m.ab.rets[k] != m.ab.calls.size() + m.ab.ints.size() + k) contiguous = false;
    for (std::size_t a = 0; a < m.ab.names.size(); ++a) {
      const auto& slot = m.ab.kind[a] == LetterKind::Call
                             ? m.ab.calls
                             : m.ab.kind[a] == LetterKind::Internal ? m.ab.ints : m.ab.rets;
      if (m.ab.pos[a] >= slot.size() || slot[m.ab.pos[a]] != a) contiguous = false;
    }
    if (!contiguous)
      out.push_back({DiagnosticKind::BadPartition,
                     "letters must be declared calls first, then internals, then returns"});
  }
  check_letter_names(m.ab.names, out);

  {
    std::unordered_set<std::string> seen;
    for (const auto& s : m.sym_names)
      if (!seen.insert(s).second)
        out.push_back(
            {DiagnosticKind::DuplicateStackSymbol, "stack symbol '" + s + "' declared twice"});
  }

  const std::uint32_t nc = m.ab.ncall(), ni = m.ab.nint(), nr = m.ab.nret(), ns = m.nsyms();
  auto state_name = [&](StateIdx q) { return q < n ? m.state_names[q] : std::to_string(q); };

  if (m.call_target.size() != static_cast<std::size_t>(n) * nc ||
      m.call_push.size() != static_cast<std::size_t>(n) * nc ||
      m.int_target.size() != static_cast<std::size_t>(n) * ni ||
      m.ret_target.size() != static_cast<std::size_t>(n) * nr * ns) {
    out.push_back({DiagnosticKind::IncompleteTransition, "transition tables have wrong size"});
    return out;  // indexing below would be unsafe
  }

  for (StateIdx q = 0; q < n; ++q) {
    for (std::uint32_t c = 0; c < nc; ++c) {
      StateIdx t = m.call_next(q, c);
      SymIdx g = m.call_sym(q, c);
      if (t == kNone || g == kNone)
        out.push_back({DiagnosticKind::IncompleteTransition,
                       "missing call row for state " + state_name(q) + ", letter '" +
                           m.ab.names[m.ab.calls[c]] + "'"});
      else {
        if (t >= n)
          out.push_back({DiagnosticKind::InvalidTarget, "call row targets unknown state"});
        if (g == kBottom)
          out.push_back({DiagnosticKind::PushesBottom,
                         "call row for state " + state_name(q) + ", letter '" +
                             m.ab.names[m.ab.calls[c]] + "' pushes the bottom marker"});
        else if (g >= ns)
          out.push_back({DiagnosticKind::InvalidTarget, "call row pushes unknown symbol"});
      }
    }
    for (std::uint32_t i = 0; i < ni; ++i) {
      StateIdx t = m.int_next(q, i);
      if (t == kNone)
        out.push_back({DiagnosticKind::IncompleteTransition,
                       "missing internal row for state " + state_name(q) + ", letter '" +
                           m.ab.names[m.ab.ints[i]] + "'"});
      else if (t >= n)
        out.push_back({DiagnosticKind::InvalidTarget, "internal row targets unknown state"});
    }
    for (std::uint32_t r = 0; r < nr; ++r)
      for (SymIdx g = 0; g < ns; ++g) {
        StateIdx t = m.ret_next(q, r, g);
        if (t == kNone)
          out.push_back({DiagnosticKind::IncompleteTransition,
                         "missing return row for state " + state_name(q) + ", letter '" +
                             m.ab.names[m.ab.rets[r]] + "', symbol " +
                             (g < ns ? m.sym_names[g] : std::to_string(g))});
        else if (t >= n)
          out.push_back({DiagnosticKind::InvalidTarget, "return row targets unknown state"});
      }
  }

  if (m.initial && *m.initial >= n)
    out.push_back({DiagnosticKind::InvalidTarget, "initial state is out of range"});
  for (StateIdx f : m.finals)
    if (f >= n) out.push_back({DiagnosticKind::InvalidTarget, "final state is out of range"});
  if (!std::is_sorted(m.finals.begin(), m.finals.end()) ||
      std::adjacent_find(m.finals.begin(), m.finals.end()) != m.finals.end())
    out.push_back({DiagnosticKind::InvalidTarget, "final states must be sorted and unique"});

  return out;
}

ValidationError::ValidationError(std::vector<Diagnostic> diags)
    : std::runtime_error([&diags] {
        std::string msg = "invalid automaton:";
        for (const auto& d : diags) {
          msg += "\n  [";
          msg += diagnostic_kind_name(d.kind);
          msg += "] ";
          msg += d.detail;
        }
        return msg;
      }()),
      diags_(std::move(diags)) {}

void require_valid(const Dvpda& m) {
  auto diags = validate(m);
  if (!diags.empty()) throw ValidationError(std::move(diags));
}

Classification classify(const Dvpda& m) {
  Classification cl;
  cl.very_visibly = true;
  cl.has_call = m.ab.ncall() > 0;
  cl.has_return = m.ab.nret() > 0;
  const std::uint32_t nc = m.ab.ncall();
  // Very visibly: the pushed symbol depends on the letter alone, not on the
  // state. Different letters may push different symbols. Counter: the calls
  // use at most one distinct symbol overall; extra declared-but-unused stack
  // symbols do not matter. Both hold vacuously without calls.
  std::unordered_set<SymIdx> pushed;
  for (std::uint32_t c = 0; c < nc && m.nstates() > 0; ++c) {
    SymIdx g0 = m.call_sym(0, c);
    pushed.insert(g0);
    for (StateIdx q = 1; q < m.nstates(); ++q) {
      if (m.call_sym(q, c) != g0) cl.very_visibly = false;
      pushed.insert(m.call_sym(q, c));
    }
  }
  cl.counter = pushed.size() <= 1;
  return cl;
}

std::vector<Diagnostic> validate(const Dfa& d) {
  std::vector<Diagnostic> out;
  if (d.nstates() == 0) out.push_back({DiagnosticKind::EmptyStateSet, "automaton has no states"});
  std::unordered_set<std::string> seen;
  for (const auto& nm : d.letter_names)
    if (!seen.insert(nm).second)
      out.push_back({DiagnosticKind::DuplicateLetter, "letter '" + nm + "' declared twice"});
  if (d.target.size() != static_cast<std::size_t>(d.nstates()) * d.nletters()) {
    out.push_back({DiagnosticKind::IncompleteTransition, "transition table has wrong size"});
    return out;
  }
  for (StateIdx q = 0; q < d.nstates(); ++q)
    for (std::uint32_t a = 0; a < d.nletters(); ++a) {
      StateIdx t = d.next(q, a);
      if (t == kNone)
        out.push_back({DiagnosticKind::IncompleteTransition,
                       "missing row for state " + d.state_names[q] + ", letter '" +
                           d.letter_names[a] + "'"});
      else if (t >= d.nstates())
        out.push_back({DiagnosticKind::InvalidTarget, "row targets unknown state"});
    }
  for (StateIdx s : d.subset)
    if (s >= d.nstates())
      out.push_back({DiagnosticKind::InvalidTarget, "subset member is out of range"});
  if (!std::is_sorted(d.subset.begin(), d.subset.end()) ||
      std::adjacent_find(d.subset.begin(), d.subset.end()) != d.subset.end())
    out.push_back({DiagnosticKind::InvalidTarget, "subset must be sorted and unique"});
  return out;
}

void require_valid(const Dfa& d) {
  auto diags = validate(d);
  if (!diags.empty()) throw ValidationError(std::move(diags));
}

Dvpda embed_dfa(const Dfa& d) {
  Dvpda m;
  m.state_names = d.state_names;
  m.sym_names = {"BOT"};
  m.ab.names = d.letter_names;
  m.ab.kind.assign(d.nletters(), LetterKind::Internal);
  m.ab.pos.resize(d.nletters());
  for (std::uint32_t a = 0; a < d.nletters(); ++a) {
    m.ab.pos[a] = a;
    m.ab.ints.push_back(a);
  }
  m.int_target = d.target;
  return m;
}

Dfa strip_to_internal_dfa(const Dvpda& m) {
  Dfa d;
  d.state_names = m.state_names;
  const std::uint32_t ni = m.ab.nint(), nr = m.ab.nret();
  for (std::uint32_t i = 0; i < ni; ++i) d.letter_names.push_back(m.ab.names[m.ab.ints[i]]);
  for (std::uint32_t r = 0; r < nr; ++r) d.letter_names.push_back(m.ab.names[m.ab.rets[r]]);
  d.target.resize(static_cast<std::size_t>(m.nstates()) * (ni + nr));
  for (StateIdx q = 0; q < m.nstates(); ++q) {
    for (std::uint32_t i = 0; i < ni; ++i) d.target[q * (ni + nr) + i] = m.int_next(q, i);
    for (std::uint32_t r = 0; r < nr; ++r)
      d.target[q * (ni + nr) + ni + r] = m.ret_next(q, r, kBottom);
  }
  return d;
}

Dfa collapse_calls_dfa(const Dvpda& m) {
  Dfa d;
  d.state_names = m.state_names;
  const std::uint32_t nc = m.ab.ncall(), ni = m.ab.nint(), nr = m.ab.nret();
  const std::uint32_t total = nc + ni + nr;
  d.letter_names.resize(total);
  d.target.resize(static_cast<std::size_t>(m.nstates()) * total);
  // Keep the global declaration order so letter indices line up with m.
  for (std::uint32_t a = 0; a < total; ++a) d.letter_names[a] = m.ab.names[a];
  for (StateIdx q = 0; q < m.nstates(); ++q)
    for (std::uint32_t a = 0; a < total; ++a) {
      StateIdx t;
      switch (m.ab.kind[a]) {
        case LetterKind::Call: t = m.call_next(q, m.ab.pos[a]); break;
        case LetterKind::Internal: t = m.int_next(q, m.ab.pos[a]); break;
        default: t = m.ret_next(q, m.ab.pos[a], kBottom); break;
      }
      d.target[q * total + a] = t;
    }
  return d;
}

}  // namespace visync
