// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#include "visync.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <variant>
#include <vector>

#include "automaton.hpp"
#include "emptiness.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "parser.hpp"
#include "reductions.hpp"
#include "semantics.hpp"
#include "sync.hpp"
#include "transducer.hpp"
#include "util.hpp"

struct visync_object {
  visync::ParsedObject value;
};

struct visync_decision {
  bool answer = false;
  bool witness_present = false;
  bool witness_overflow = false;
  std::string witness;
  unsigned long long witness_length = 0;
  std::string procedure;
  unsigned long long explored = 0;
  unsigned long long rounds = 0;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** error, const std::string& msg) {
  if (error) *error = dup_string(msg);
}

template <typename F>
int wrap(char** error, F&& body) noexcept {
  try {
    return body();
  } catch (const visync::ParseError& e) {
    set_error(error, e.what());
    return VISYNC_ERROR_PARSE;
  } catch (const visync::ValidationError& e) {
    set_error(error, e.what());
    return VISYNC_ERROR_INVALID;
  } catch (const visync::BudgetError& e) {
    set_error(error, e.what());
    return VISYNC_ERROR_BUDGET;
  } catch (const visync::ArgumentError& e) {  // includes name collisions
    set_error(error, e.what());
    return VISYNC_ERROR_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(error, e.what());
    return VISYNC_ERROR_INVALID;
  } catch (...) {
    set_error(error, "unknown error");
    return VISYNC_ERROR_INVALID;
  }
}

const visync::Dvpda* as_dvpda(const visync_object* obj) {
  return obj ? std::get_if<visync::Dvpda>(&obj->value) : nullptr;
}
const visync::Dfa* as_dfa(const visync_object* obj) {
  return obj ? std::get_if<visync::Dfa>(&obj->value) : nullptr;
}
const visync::Vst* as_vst(const visync_object* obj) {
  return obj ? std::get_if<visync::Vst>(&obj->value) : nullptr;
}

int unsupported(char** error, const char* what) {
  set_error(error, std::string("operation needs ") + what);
  return VISYNC_ERROR_UNSUPPORTED;
}

std::string join_letters(const std::vector<std::string>& names,
                         const visync::Word& w) {
  std::vector<std::string> parts;
  parts.reserve(w.size());
  for (visync::LetterIdx a : w) parts.push_back(names[a]);
  return visync::join(parts);
}

visync_decision* make_decision(const visync::Decision& d,
                               const std::vector<std::string>& letter_names) {
  auto* out = new visync_decision;
  out->answer = d.answer;
  out->witness_present = d.witness_present;
  out->witness_overflow = d.witness_overflow;
  if (d.witness_present) out->witness = join_letters(letter_names, d.witness);
  out->witness_length = d.witness_length;
  out->procedure = d.procedure;
  out->explored = d.stats.explored;
  out->rounds = d.stats.rounds;
  return out;
}

int model_from_int(int model, visync::SyncModel* out) {
  if (model < 0 || model > 2) return 0;
  *out = static_cast<visync::SyncModel>(model);
  return 1;
}

int bound_from_ll(long long turn_bound,
                  std::optional<std::uint32_t>* out) {
  if (turn_bound < -1 || turn_bound > 0x7fffffffLL) return 0;
  if (turn_bound >= 0) *out = static_cast<std::uint32_t>(turn_bound);
  return 1;
}

}  // namespace

extern "C" {

int visync_parse_text(const char* text, visync_object** out, char** error) {
  return wrap(error, [&]() -> int {
    if (!text || !out) throw visync::ArgumentError("text and out must be non-NULL");
    auto parsed = visync::parse_text(text);
    *out = new visync_object{std::move(parsed)};
    return VISYNC_OK;
  });
}

void visync_object_free(visync_object* obj) { delete obj; }

int visync_object_kind(const visync_object* obj) {
  if (!obj) return -1;
  if (std::holds_alternative<visync::Dvpda>(obj->value)) return VISYNC_KIND_DVPDA;
  if (std::holds_alternative<visync::Dfa>(obj->value)) return VISYNC_KIND_DFA;
  return VISYNC_KIND_VST;
}

int visync_serialize(const visync_object* obj, char** out, char** error) {
  return wrap(error, [&]() -> int {
    if (!obj || !out) throw visync::ArgumentError("object and out must be non-NULL");
    *out = dup_string(visync::serialize(obj->value));
    return VISYNC_OK;
  });
}

int visync_classify(const visync_object* obj, int* very_visibly, int* counter,
                    int* has_call, int* has_return, char** error) {
  const visync::Dvpda* m = as_dvpda(obj);
  if (!m) return unsupported(error, "a stack automaton (dvpda)");
  return wrap(error, [&]() -> int {
    visync::require_valid(*m);
    visync::Classification cl = visync::classify(*m);
    if (very_visibly) *very_visibly = cl.very_visibly ? 1 : 0;
    if (counter) *counter = cl.counter ? 1 : 0;
    if (has_call) *has_call = cl.has_call ? 1 : 0;
    if (has_return) *has_return = cl.has_return ? 1 : 0;
    return VISYNC_OK;
  });
}

int visync_classify_vst(const visync_object* obj, int* visibly,
                        int* very_visibly, char** error) {
  const visync::Vst* t = as_vst(obj);
  if (!t) return unsupported(error, "a transducer (vst)");
  return wrap(error, [&]() -> int {
    visync::require_valid(*t);
    visync::VstClass cl = visync::classify_vst(*t);
    if (visibly) *visibly = cl.visibly ? 1 : 0;
    if (very_visibly) *very_visibly = cl.very_visibly ? 1 : 0;
    return VISYNC_OK;
  });
}

int visync_decide(const visync_object* obj, int model, long long turn_bound,
                  unsigned long long budget, visync_decision** out,
                  char** error) {
  const visync::Dvpda* m = as_dvpda(obj);
  if (!m) return unsupported(error, "a stack automaton (dvpda)");
  return wrap(error, [&]() -> int {
    if (!out) throw visync::ArgumentError("out must be non-NULL");
    visync::SyncModel sm;
    if (!model_from_int(model, &sm))
      throw visync::ArgumentError("model must be 0 (empty), 1 (same) or 2 (arbitrary)");
    std::optional<std::uint32_t> bound;
    if (!bound_from_ll(turn_bound, &bound))
      throw visync::ArgumentError("turn bound must be -1 (none) or non-negative");
    visync::Decision dec = visync::decide_sync(*m, sm, bound, budget);
    *out = make_decision(dec, m->ab.names);
    return VISYNC_OK;
  });
}

int visync_trace_sync(const visync_object* obj, unsigned long long budget,
                      visync_decision** out, char** error) {
  const visync::Vst* t = as_vst(obj);
  if (!t) return unsupported(error, "a transducer (vst)");
  return wrap(error, [&]() -> int {
    if (!out) throw visync::ArgumentError("out must be non-NULL");
    visync::Decision dec = visync::trace_sync_vst(*t, budget);
    *out = make_decision(dec, t->in_names);
    return VISYNC_OK;
  });
}

int visync_decision_answer(const visync_decision* dec) {
  return dec && dec->answer ? 1 : 0;
}

const char* visync_decision_procedure(const visync_decision* dec) {
  return dec ? dec->procedure.c_str() : nullptr;
}

const char* visync_decision_witness(const visync_decision* dec) {
  return dec && dec->witness_present ? dec->witness.c_str() : nullptr;
}

unsigned long long visync_decision_witness_length(const visync_decision* dec) {
  return dec ? dec->witness_length : 0;
}

int visync_decision_witness_overflow(const visync_decision* dec) {
  return dec && dec->witness_overflow ? 1 : 0;
}

unsigned long long visync_decision_explored(const visync_decision* dec) {
  return dec ? dec->explored : 0;
}

unsigned long long visync_decision_rounds(const visync_decision* dec) {
  return dec ? dec->rounds : 0;
}

void visync_decision_free(visync_decision* dec) { delete dec; }

int visync_check_witness(const visync_object* obj, const char* word, int model,
                         long long turn_bound, int* ok, char** error) {
  const visync::Dvpda* m = as_dvpda(obj);
  if (!m) return unsupported(error, "a stack automaton (dvpda)");
  return wrap(error, [&]() -> int {
    if (!word || !ok) throw visync::ArgumentError("word and ok must be non-NULL");
    visync::require_valid(*m);
    visync::SyncModel sm;
    if (!model_from_int(model, &sm))
      throw visync::ArgumentError("model must be 0 (empty), 1 (same) or 2 (arbitrary)");
    std::optional<std::uint32_t> bound;
    if (!bound_from_ll(turn_bound, &bound))
      throw visync::ArgumentError("turn bound must be -1 (none) or non-negative");
    visync::Word w = visync::word_from_names(m->ab, word);
    *ok = visync::check_witness(*m, w, sm, bound) ? 1 : 0;
    return VISYNC_OK;
  });
}

int visync_language_empty(const visync_object* obj, int mode,
                          unsigned long long budget, int* empty, char** witness,
                          unsigned long long* witness_length, char** error) {
  const visync::Dvpda* m = as_dvpda(obj);
  if (!m) return unsupported(error, "a stack automaton (dvpda)");
  return wrap(error, [&]() -> int {
    if (!empty) throw visync::ArgumentError("empty must be non-NULL");
    if (mode != VISYNC_ACCEPT_FINAL && mode != VISYNC_ACCEPT_FINAL_EMPTY)
      throw visync::ArgumentError("mode must be 0 (final) or 1 (final-empty)");
    visync::require_valid(*m);
    if (witness) *witness = nullptr;
    if (witness_length) *witness_length = 0;
    visync::EmptinessWitness w;
    bool is_empty = visync::is_language_empty(
        *m, static_cast<visync::AcceptanceMode>(mode), budget, &w);
    *empty = is_empty ? 1 : 0;
    if (!is_empty && w.present) {
      if (witness_length) *witness_length = w.length;
      if (witness && !w.overflow) *witness = dup_string(join_letters(m->ab.names, w.word));
    }
    return VISYNC_OK;
  });
}

int visync_oracle(const visync_object* obj, int model, long long turn_bound,
                  unsigned int max_len, unsigned long long budget, int* outcome,
                  char** witness, char** error) {
  const visync::Dvpda* m = as_dvpda(obj);
  if (!m) return unsupported(error, "a stack automaton (dvpda)");
  return wrap(error, [&]() -> int {
    if (!outcome) throw visync::ArgumentError("outcome must be non-NULL");
    visync::SyncModel sm;
    if (!model_from_int(model, &sm))
      throw visync::ArgumentError("model must be 0 (empty), 1 (same) or 2 (arbitrary)");
    std::optional<std::uint32_t> bound;
    if (!bound_from_ll(turn_bound, &bound))
      throw visync::ArgumentError("turn bound must be -1 (none) or non-negative");
    if (witness) *witness = nullptr;
    visync::OracleResult res = visync::oracle_search(
        *m, sm, bound, max_len,
        budget == 0 ? visync::kDefaultOracleBudget : budget);
    *outcome = static_cast<int>(res.outcome);
    if (res.outcome == visync::OracleOutcome::Found && witness)
      *witness = dup_string(join_letters(m->ab.names, res.word));
    return VISYNC_OK;
  });
}

int visync_generate(const visync_object* obj, const char* reduction,
                    long long turns, visync_object** out, char** error) {
  const visync::Dfa* d = as_dfa(obj);
  if (!d) return unsupported(error, "a DFA with a designated subset");
  return wrap(error, [&]() -> int {
    if (!reduction || !out)
      throw visync::ArgumentError("reduction and out must be non-NULL");
    std::optional<std::uint32_t> n;
    if (!bound_from_ll(turns, &n))
      throw visync::ArgumentError("turns must be -1 (none) or non-negative");
    visync::Dvpda m = visync::generate_reduction(*d, reduction, n);
    *out = new visync_object{std::move(m)};
    return VISYNC_OK;
  });
}

void visync_free_string(char* s) { std::free(s); }

const char* visync_version(void) { return "0.1.0"; }

}  // extern "C"
