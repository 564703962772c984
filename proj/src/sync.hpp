// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "automaton.hpp"
#include "emptiness.hpp"
#include "semantics.hpp"

namespace visync {

struct DecisionStats {
  std::uint64_t explored = 0;  // engine units / search nodes across sub-queries
  std::uint32_t rounds = 0;    // pair rounds of the active-set loop, when used
};

/// Outcome of a synchronizability query. When `answer` is true, either
/// `witness_present` holds (and `witness` passes check_witness for the
/// requested model and bound) or `witness_overflow` reports that the
/// certificate exceeded the expansion cap, with `witness_length` carrying its
/// length when known (0 when unknown).
struct Decision {
  bool answer = false;
  bool witness_present = false;
  bool witness_overflow = false;
  Word witness;
  std::uint64_t witness_length = 0;
  std::string procedure;
  DecisionStats stats;
};

/// Classical pairwise-merging synchronization for complete DFAs. The witness
/// uses the DFA's letter indices.
Decision dfa_pair_sync(const Dfa& d);

/// Iterated pair merging in the empty-stack model (requires return letters;
/// callers strip calls first when there are none). Each round merges the two
/// least active states via a pair-product emptiness query; round count is at
/// most |Q|-1.
Decision sync_empty_pairwise(const Dvpda& m, std::uint64_t budget = kDefaultBudget);

/// Reachability for 0-turn words: walks state-set images under words that
/// never pop (returns allowed only before the first call). With
/// `require_push_agreement` (the equal-stack model), calls are allowed only
/// when every state of the current set pushes the same symbol.
Decision zero_turn_reach(const Dvpda& m, bool require_push_agreement,
                         std::uint64_t budget = kDefaultBudget);

/// Emptiness of the |Q|-fold product, unbounded. Exponential fallback; also
/// used to cross-check the cheaper dispatch rules.
Decision full_product_decide(const Dvpda& m, SyncModel model,
                             std::uint64_t budget = kDefaultBudget);

/// Emptiness of the |Q|-fold product with the stroke index, bound n.
Decision turn_product_decide(const Dvpda& m, SyncModel model, std::uint32_t n,
                             std::uint64_t budget = kDefaultBudget);

/// Model- and subclass-aware dispatch (first matching rule wins):
///   1. singleton state set: yes with the empty word;
///   2. n=0, Empty: pair algorithm on the height-neutral letter DFA;
///   3. n=0, Same/Arbitrary: 0-turn set reachability (push agreement for Same);
///   4. n>=1: indexed product emptiness;
///   5. very visibly, Same/Arbitrary: reuse the Empty answer when returns
///      exist, else pair algorithm on the call-collapsed DFA;
///   6. Empty: iterated pair merging (calls stripped when no returns exist);
///   7. Same with returns: reuse the Empty decision;
///   8. Same without returns: 0-turn set reachability with push agreement;
///   9. Arbitrary without returns: pair algorithm on the call-collapsed DFA;
///  10. Arbitrary with returns: unbounded product emptiness.
Decision decide_sync(const Dvpda& m, SyncModel model,
                     std::optional<std::uint32_t> turn_bound = std::nullopt,
                     std::uint64_t budget = kDefaultBudget);

}  // namespace visync
