/* Copyright (c) 2026 The visync authors */
/* SPDX-License-Identifier: Apache-2.0 */

/*
 * C interface of the visync library.
 *
 * Conventions:
 *   - Every fallible function returns a VISYNC_* status code. On failure, if
 *     the caller passed a non-NULL `error` slot, it receives a heap-allocated
 *     message that must be released with visync_free_string().
 *   - Words cross the boundary as space-joined letter names; the empty string
 *     is the empty word and NULL means "no word".
 *   - Strings handed out through `char **` out-parameters are owned by the
 *     caller (release with visync_free_string). Strings returned as plain
 *     `const char *` from accessor functions are owned by the queried object
 *     and live until that object is freed.
 */

#ifndef VISYNC_H
#define VISYNC_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. */
#define VISYNC_OK 0
#define VISYNC_ERROR_PARSE 1       /* malformed input text */
#define VISYNC_ERROR_INVALID 2     /* structurally broken automaton */
#define VISYNC_ERROR_UNSUPPORTED 3 /* operation does not apply to this object */
#define VISYNC_ERROR_BUDGET 4      /* exploration budget exhausted */
#define VISYNC_ERROR_ARGUMENT 5    /* bad parameter value */

/* Kinds reported by visync_object_kind. */
#define VISYNC_KIND_DVPDA 0
#define VISYNC_KIND_DFA 1
#define VISYNC_KIND_VST 2

/* Stack models for synchronization. */
#define VISYNC_MODEL_EMPTY 0
#define VISYNC_MODEL_SAME 1
#define VISYNC_MODEL_ARBITRARY 2

/* Acceptance modes for language emptiness. */
#define VISYNC_ACCEPT_FINAL 0
#define VISYNC_ACCEPT_FINAL_EMPTY 1

/* Oracle outcomes. */
#define VISYNC_ORACLE_FOUND 0
#define VISYNC_ORACLE_NONE_WITHIN 1
#define VISYNC_ORACLE_BUDGET 2

/* Opaque handles. */
typedef struct visync_object visync_object;
typedef struct visync_decision visync_decision;

/* Parses one automaton description (formats: dvpda, dfa, vst). */
int visync_parse_text(const char *text, visync_object **out, char **error);

void visync_object_free(visync_object *obj);

/* VISYNC_KIND_* of the parsed object, or -1 for NULL. */
int visync_object_kind(const visync_object *obj);

/* Renders the object back to its textual format. */
int visync_serialize(const visync_object *obj, char **out, char **error);

/* Class report for a stack automaton (VISYNC_KIND_DVPDA only). Any of the
 * flag slots may be NULL. */
int visync_classify(const visync_object *obj, int *very_visibly, int *counter,
                    int *has_call, int *has_return, char **error);

/* Class report for a transducer (VISYNC_KIND_VST only). */
int visync_classify_vst(const visync_object *obj, int *visibly,
                        int *very_visibly, char **error);

/* Decides synchronizability of a stack automaton. `model` is a
 * VISYNC_MODEL_* value; `turn_bound` is the maximal number of stack-height
 * turns, or -1 for no bound; `budget` caps exploration (0 = default). */
int visync_decide(const visync_object *obj, int model, long long turn_bound,
                  unsigned long long budget, visync_decision **out,
                  char **error);

/* Trace synchronization for a transducer (VISYNC_KIND_VST only): is there an
 * input word that drives every state to one common state while producing the
 * same output from every start state? */
int visync_trace_sync(const visync_object *obj, unsigned long long budget,
                      visync_decision **out, char **error);

/* Decision accessors. */
int visync_decision_answer(const visync_decision *dec); /* 1 = yes */
const char *visync_decision_procedure(const visync_decision *dec);
/* NULL when no witness is attached; "" is the empty word. */
const char *visync_decision_witness(const visync_decision *dec);
unsigned long long visync_decision_witness_length(const visync_decision *dec);
/* 1 when a witness exists but exceeded the expansion cap (only its length is
 * reported in that case). */
int visync_decision_witness_overflow(const visync_decision *dec);
unsigned long long visync_decision_explored(const visync_decision *dec);
unsigned long long visync_decision_rounds(const visync_decision *dec);
void visync_decision_free(visync_decision *dec);

/* Replays `word` (space-joined letter names) from every state and reports in
 * `ok` whether it synchronizes under the model and optional turn bound. */
int visync_check_witness(const visync_object *obj, const char *word, int model,
                         long long turn_bound, int *ok, char **error);

/* Language emptiness for a stack automaton with an `initial` state. `mode` is
 * a VISYNC_ACCEPT_* value. `empty` receives 1 when the language is empty.
 * When non-empty, `witness` (if non-NULL) receives an accepted word, or stays
 * NULL with `witness_length` set when the word exceeds the expansion cap. */
int visync_language_empty(const visync_object *obj, int mode,
                          unsigned long long budget, int *empty,
                          char **witness, unsigned long long *witness_length,
                          char **error);

/* Exhaustive breadth-first search for a synchronizing word of length at most
 * `max_len`. `outcome` receives a VISYNC_ORACLE_* value; on FOUND, `witness`
 * (if non-NULL) receives the lexicographically least shortest word. */
int visync_oracle(const visync_object *obj, int model, long long turn_bound,
                  unsigned int max_len, unsigned long long budget, int *outcome,
                  char **witness, char **error);

/* Builds one of the hardness constructions from a DFA with a designated
 * subset. `reduction` is one of "thm2", "thm3", "thm8", "thm10"; `turns` is
 * the bound for "thm8" (>= 1) and must be -1 for the other tokens. */
int visync_generate(const visync_object *obj, const char *reduction,
                    long long turns, visync_object **out, char **error);

void visync_free_string(char *s);

const char *visync_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* VISYNC_H */
