// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace visync {

using StateIdx = std::uint32_t;
using LetterIdx = std::uint32_t;  // index into the global letter order
using SymIdx = std::uint32_t;     // index into the stack alphabet; 0 is the bottom marker
using Word = std::vector<LetterIdx>;

inline constexpr std::uint32_t kNone = 0xffffffffu;
inline constexpr SymIdx kBottom = 0;

enum class LetterKind : std::uint8_t { Call = 0, Internal = 1, Return = 2 };

/// Input alphabet partitioned into calls, internals and returns.
///
/// Letters keep one global order (their declaration order: all calls, then all
/// internals, then all returns). `kind` and `pos` map a global index to its
/// class and the index within that class.
struct PartitionedAlphabet {
  std::vector<std::string> names;  // by global index
  std::vector<LetterKind> kind;    // by global index
  std::vector<std::uint32_t> pos;  // by global index: index within its class
  std::vector<LetterIdx> calls;    // global indices of call letters, in order
  std::vector<LetterIdx> ints;     // global indices of internal letters
  std::vector<LetterIdx> rets;     // global indices of return letters

  std::size_t size() const { return names.size(); }
  std::uint32_t ncall() const { return static_cast<std::uint32_t>(calls.size()); }
  std::uint32_t nint() const { return static_cast<std::uint32_t>(ints.size()); }
  std::uint32_t nret() const { return static_cast<std::uint32_t>(rets.size()); }

  /// Global index of the named letter, or kNone.
  std::uint32_t index_of(const std::string& name) const;
};

/// Assembles a class-contiguous alphabet: all calls first, then all internals,
/// then all returns, each class in the given order.
PartitionedAlphabet make_alphabet(const std::vector<std::string>& calls,
                                  const std::vector<std::string>& ints,
                                  const std::vector<std::string>& rets);

/// State names "0", "1", ..., "n-1".
std::vector<std::string> numeric_names(std::uint32_t n);

enum class DiagnosticKind : std::uint8_t {
  EmptyStateSet,
  BadPartition,
  DuplicateLetter,
  DuplicateStackSymbol,
  ReservedLetter,
  IncompleteTransition,
  InvalidTarget,
  PushesBottom,
};

struct Diagnostic {
  DiagnosticKind kind;
  std::string detail;
};

const char* diagnostic_kind_name(DiagnosticKind k);

/// Deterministic automaton whose stack discipline is driven by the letter
/// class: calls always push one non-bottom symbol, internals leave the stack
/// alone, returns pop the top symbol (except on the bottom marker, which is
/// read but never popped). Transition tables must be complete.
struct Dvpda {
  std::vector<std::string> state_names;  // size |Q|
  std::vector<std::string> sym_names;    // size |Gamma|; index 0 is the bottom marker
  PartitionedAlphabet ab;

  // Flattened complete tables (entries may be kNone before validation).
  std::vector<StateIdx> call_target;  // [q * ncall + c]
  std::vector<SymIdx> call_push;      // [q * ncall + c], never kBottom when valid
  std::vector<StateIdx> int_target;   // [q * nint + i]
  std::vector<StateIdx> ret_target;   // [(q * nret + r) * nsym + g]

  std::optional<StateIdx> initial;       // used by language-emptiness queries
  std::vector<StateIdx> finals;          // sorted unique when valid

  std::uint32_t nstates() const { return static_cast<std::uint32_t>(state_names.size()); }
  std::uint32_t nsyms() const { return static_cast<std::uint32_t>(sym_names.size()); }

  StateIdx call_next(StateIdx q, std::uint32_t c) const { return call_target[q * ab.ncall() + c]; }
  SymIdx call_sym(StateIdx q, std::uint32_t c) const { return call_push[q * ab.ncall() + c]; }
  StateIdx int_next(StateIdx q, std::uint32_t i) const { return int_target[q * ab.nint() + i]; }
  StateIdx ret_next(StateIdx q, std::uint32_t r, SymIdx g) const {
    return ret_target[(q * ab.nret() + r) * nsyms() + g];
  }

  bool is_final(StateIdx q) const;
};

/// Collects every defect; empty result means the automaton is usable.
std::vector<Diagnostic> validate(const Dvpda& m);

/// Throws ValidationError when validate(m) is non-empty.
void require_valid(const Dvpda& m);

struct Classification {
  bool very_visibly = false;  // each call letter pushes one symbol independent of the state
  bool counter = false;       // at most one distinct non-bottom symbol is ever pushed
  bool has_call = false;
  bool has_return = false;
};

Classification classify(const Dvpda& m);

/// Carries the diagnostics of a failed validate().
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Diagnostic> diags);
  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  std::vector<Diagnostic> diags_;
};

/// Plain complete DFA, used as reduction input and as the target of
/// call-collapsing constructions.
struct Dfa {
  std::vector<std::string> state_names;
  std::vector<std::string> letter_names;
  std::vector<StateIdx> target;  // [q * nletters + a]
  std::vector<StateIdx> subset;  // optional designated subset, sorted unique

  std::uint32_t nstates() const { return static_cast<std::uint32_t>(state_names.size()); }
  std::uint32_t nletters() const { return static_cast<std::uint32_t>(letter_names.size()); }
  StateIdx next(StateIdx q, std::uint32_t a) const { return target[q * nletters() + a]; }
};

std::vector<Diagnostic> validate(const Dfa& d);
void require_valid(const Dfa& d);

/// Embeds a DFA as an automaton with only internal letters.
Dvpda embed_dfa(const Dfa& d);

/// Projects the internal letters plus the bottom-marker behaviour of the
/// return letters into a DFA over the same states. Used for automata without
/// call letters (the stack never grows, so returns always read the marker).
Dfa strip_to_internal_dfa(const Dvpda& m);

/// Collapses call letters into internal letters (drops pushes) and keeps the
/// bottom-marker behaviour of returns. Only meaningful for questions that
/// ignore stack contents.
Dfa collapse_calls_dfa(const Dvpda& m);

}  // namespace visync
