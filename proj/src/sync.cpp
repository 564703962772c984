// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#include "sync.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "errors.hpp"
#include "products.hpp"
#include "util.hpp"

namespace visync {

namespace {

const char* kProcPairwiseEmpty = "pairwise-empty";
const char* kProcSameReturnReduction = "same-return-reduction";
const char* kProcArbNoReturnDfa = "arb-noreturn-dfa";
const char* kProcVvEquivalence = "vv-equivalence";
const char* kProcZeroTurnDfa = "zero-turn-dfa";
const char* kProcZeroTurnSameReach = "zero-turn-same-reach";
const char* kProcZeroTurnArbReach = "zero-turn-arb-reach";
const char* kProcFullProduct = "full-product";
const char* kProcTurnProduct = "turn-product";
const char* kProcSingleton = "singleton";

std::vector<StateIdx> sorted_image(const Dvpda& m, const std::vector<StateIdx>& set,
                                   const Word& w) {
  std::vector<StateIdx> out;
  out.reserve(set.size());
  for (StateIdx s : set) out.push_back(run(m, s, w).state);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Shortest prefix of w after which the runs from p and q share a state with
/// stacks back to the bottom marker. The engine's accepted words end with a
/// detector letter past the synchronization point, so trimming both shortens
/// and normalizes the witness.
Word trim_pair_witness(const Dvpda& m, StateIdx p, StateIdx q, const Word& w) {
  Config a, b;
  a.state = p;
  b.state = q;
  for (std::size_t i = 0; i < w.size(); ++i) {
    step(m, a, w[i]);
    step(m, b, w[i]);
    if (a.state == b.state && a.stack_is_bottom_only() && b.stack_is_bottom_only())
      return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  }
  assert(false && "pair witness does not synchronize the pair");
  return w;
}

/// Maps a decision over a derived DFA back to the base automaton's letters.
Decision map_dfa_decision(Decision dec, const std::vector<LetterIdx>& letter_map) {
  for (LetterIdx& a : dec.witness) a = letter_map[a];
  return dec;
}

std::vector<LetterIdx> internal_dfa_letter_map(const Dvpda& m) {
  std::vector<LetterIdx> map;
  for (LetterIdx a : m.ab.ints) map.push_back(a);
  for (LetterIdx a : m.ab.rets) map.push_back(a);
  return map;
}

std::vector<LetterIdx> identity_letter_map(const Dvpda& m) {
  std::vector<LetterIdx> map(m.ab.size());
  for (std::uint32_t a = 0; a < map.size(); ++a) map[a] = a;
  return map;
}

Decision product_decide(const Dvpda& m, SyncModel model,
                        std::optional<std::uint32_t> bound, std::uint64_t budget,
                        const char* procedure) {
  TupleProduct prod(m, model, bound);
  AcceptanceMode mode = model == SyncModel::Empty ? AcceptanceMode::FinalStateEmptyStack
                                                  : AcceptanceMode::FinalState;
  EmptinessAnalysis an(prod, budget);
  an.saturate();
  Decision dec;
  dec.procedure = procedure;
  dec.stats.explored = an.explored();
  if (!an.non_empty(mode)) return dec;
  dec.answer = true;
  EmptinessWitness w = an.witness(mode);
  if (w.overflow) {
    dec.witness_overflow = true;
    dec.witness_length = w.length;
    return dec;
  }
  // The equal-stack detector letter sits past the base alphabet; every
  // occurrence is part of the trailing detector block.
  Word out;
  for (std::size_t i = 0; i < w.word.size(); ++i) {
    if (w.word[i] >= m.ab.size()) {
      for (std::size_t j = i; j < w.word.size(); ++j)
        assert(w.word[j] == m.ab.size() && "detector letters must be trailing");
      break;
    }
    out.push_back(w.word[i]);
  }
  dec.witness = std::move(out);
  dec.witness_present = true;
  dec.witness_length = dec.witness.size();
  return dec;
}

}  // namespace

Decision dfa_pair_sync(const Dfa& d) {
  Decision dec;
  dec.procedure = "dfa-pair";
  const std::uint32_t n = d.nstates();
  if (n <= 1) {
    dec.answer = true;
    dec.witness_present = true;
    return dec;
  }
  const std::uint32_t na = d.nletters();
  if (na == 0) return dec;

  // Inverse transition lists.
  std::vector<std::vector<StateIdx>> inv(static_cast<std::size_t>(na) * n);
  for (StateIdx q = 0; q < n; ++q)
    for (std::uint32_t a = 0; a < na; ++a) inv[a * n + d.next(q, a)].push_back(q);

  // Backward reachability from the diagonal over unordered pairs.
  auto pack = [n](StateIdx p, StateIdx q) {
    if (p > q) std::swap(p, q);
    return p * n + q;
  };
  struct Via {
    LetterIdx letter;
    std::uint32_t succ;  // packed pair it merges toward
  };
  std::unordered_map<std::uint32_t, Via> via;
  std::vector<bool> seen(static_cast<std::size_t>(n) * n);
  std::deque<std::uint32_t> queue;
  for (StateIdx q = 0; q < n; ++q) {
    seen[pack(q, q)] = true;
    queue.push_back(pack(q, q));
  }
  std::uint64_t visited = n;
  while (!queue.empty()) {
    std::uint32_t t = queue.front();
    queue.pop_front();
    StateIdx t1 = t / n, t2 = t % n;
    for (std::uint32_t a = 0; a < na; ++a)
      for (StateIdx x : inv[a * n + t1])
        for (StateIdx y : inv[a * n + t2]) {
          std::uint32_t key = pack(x, y);
          if (seen[key]) continue;
          seen[key] = true;
          ++visited;
          via.emplace(key, Via{a, t});
          queue.push_back(key);
        }
  }
  dec.stats.explored = visited;
  for (StateIdx p = 0; p < n; ++p)
    for (StateIdx q = p + 1; q < n; ++q)
      if (!seen[pack(p, q)]) return dec;  // some pair never merges

  // Merge the active set pair by pair.
  std::vector<StateIdx> active(n);
  for (StateIdx q = 0; q < n; ++q) active[q] = q;
  Word w;
  while (active.size() > 1) {
    StateIdx p = active[0], q = active[1];
    std::uint32_t cur = pack(p, q);
    while (true) {
      StateIdx c1 = cur / n, c2 = cur % n;
      if (c1 == c2) break;
      const Via& v = via.at(cur);
      w.push_back(v.letter);
      for (StateIdx& s : active) s = d.next(s, v.letter);
      cur = v.succ;
    }
    std::sort(active.begin(), active.end());
    active.erase(std::unique(active.begin(), active.end()), active.end());
  }
  dec.answer = true;
  dec.witness_present = true;
  dec.witness = std::move(w);
  dec.witness_length = dec.witness.size();
  return dec;
}

Decision sync_empty_pairwise(const Dvpda& m, std::uint64_t budget) {
  assert(m.ab.nret() > 0 && "caller must strip calls when no returns exist");
  Decision dec;
  dec.procedure = kProcPairwiseEmpty;
  std::vector<StateIdx> active(m.nstates());
  for (StateIdx q = 0; q < m.nstates(); ++q) active[q] = q;
  Word total;
  bool overflowed = false;
  while (active.size() > 1) {
    StateIdx p = active[0], q = active[1];
    PairProduct prod(m, p, q);
    EmptinessAnalysis an(prod, budget);
    an.saturate();
    dec.stats.explored += an.explored();
    if (!an.non_empty(AcceptanceMode::FinalStateEmptyStack)) {
      dec.answer = false;
      return dec;
    }
    ++dec.stats.rounds;
    if (overflowed) {
      // Witness already unavailable; keep verifying the remaining pairs so
      // the answer stays grounded, without accumulating words.
      std::vector<StateIdx> rest(active.begin() + 1, active.end());
      active = std::move(rest);
      continue;
    }
    EmptinessWitness w = an.witness(AcceptanceMode::FinalStateEmptyStack);
    if (w.overflow) {
      overflowed = true;
      dec.witness_overflow = true;
      std::vector<StateIdx> rest(active.begin() + 1, active.end());
      active = std::move(rest);
      continue;
    }
    Word pw = trim_pair_witness(m, p, q, w.word);
    total.insert(total.end(), pw.begin(), pw.end());
    active = sorted_image(m, active, pw);
  }
  dec.answer = true;
  if (!overflowed) {
    dec.witness_present = true;
    dec.witness = std::move(total);
    dec.witness_length = dec.witness.size();
  }
  return dec;
}

Decision zero_turn_reach(const Dvpda& m, bool require_push_agreement,
                         std::uint64_t budget) {
  Decision dec;
  dec.procedure =
      require_push_agreement ? kProcZeroTurnSameReach : kProcZeroTurnArbReach;
  if (budget == 0) budget = kDefaultBudget;

  struct Node {
    std::vector<StateIdx> set;
    std::uint8_t flag;  // 1 once a call has been read (returns then blocked)
    std::uint32_t parent;
    LetterIdx letter;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::vector<std::uint32_t>, VecU32Hash> visited;

  auto key_of = [](const std::vector<StateIdx>& set, std::uint8_t flag) {
    std::vector<std::uint32_t> k = set;
    k.push_back(flag);
    return k;
  };

  std::vector<StateIdx> start(m.nstates());
  for (StateIdx q = 0; q < m.nstates(); ++q) start[q] = q;
  visited.insert(key_of(start, 0));
  nodes.push_back({std::move(start), 0, kNone, 0});

  for (std::size_t at = 0; at < nodes.size(); ++at) {
    if (nodes[at].set.size() == 1) {
      Word w;
      for (std::uint32_t cur = static_cast<std::uint32_t>(at); nodes[cur].parent != kNone;
           cur = nodes[cur].parent)
        w.push_back(nodes[cur].letter);
      std::reverse(w.begin(), w.end());
      dec.answer = true;
      dec.witness_present = true;
      dec.witness = std::move(w);
      dec.witness_length = dec.witness.size();
      dec.stats.explored = nodes.size();
      return dec;
    }
    for (std::uint32_t a = 0; a < m.ab.size(); ++a) {
      const std::vector<StateIdx>& set = nodes[at].set;
      std::uint8_t flag = nodes[at].flag;
      std::vector<StateIdx> img;
      std::uint8_t nflag = flag;
      switch (m.ab.kind[a]) {
        case LetterKind::Internal: {
          std::uint32_t i = m.ab.pos[a];
          img.reserve(set.size());
          for (StateIdx s : set) img.push_back(m.int_next(s, i));
          break;
        }
        case LetterKind::Call: {
          std::uint32_t c = m.ab.pos[a];
          if (require_push_agreement) {
            SymIdx g = m.call_sym(set[0], c);
            bool ok = true;
            for (StateIdx s : set)
              if (m.call_sym(s, c) != g) {
                ok = false;
                break;
              }
            if (!ok) continue;
          }
          img.reserve(set.size());
          for (StateIdx s : set) img.push_back(m.call_next(s, c));
          nflag = 1;
          break;
        }
        case LetterKind::Return: {
          if (flag != 0) continue;  // popping would end the single stroke
          std::uint32_t r = m.ab.pos[a];
          img.reserve(set.size());
          for (StateIdx s : set) img.push_back(m.ret_next(s, r, kBottom));
          break;
        }
      }
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      auto key = key_of(img, nflag);
      if (!visited.insert(std::move(key)).second) continue;
      nodes.push_back({std::move(img), nflag, static_cast<std::uint32_t>(at), a});
      if (nodes.size() > budget)
        throw BudgetError("exploration budget exceeded in 0-turn reachability",
                          nodes.size());
    }
  }
  dec.stats.explored = nodes.size();
  return dec;
}

Decision full_product_decide(const Dvpda& m, SyncModel model, std::uint64_t budget) {
  return product_decide(m, model, std::nullopt, budget, kProcFullProduct);
}

Decision turn_product_decide(const Dvpda& m, SyncModel model, std::uint32_t n,
                             std::uint64_t budget) {
  return product_decide(m, model, n, budget, kProcTurnProduct);
}

Decision decide_sync(const Dvpda& m, SyncModel model,
                     std::optional<std::uint32_t> turn_bound, std::uint64_t budget) {
  require_valid(m);
  const bool has_ret = m.ab.nret() > 0;

  // Rule 1: a single state is synchronized by the empty word in every model.
  if (m.nstates() == 1) {
    Decision dec;
    dec.answer = true;
    dec.witness_present = true;
    dec.procedure = kProcSingleton;
    return dec;
  }

  // Rules 2-3: 0-turn bounds.
  if (turn_bound && *turn_bound == 0) {
    if (model == SyncModel::Empty) {
      // Only height-neutral letters (internals, bottom reads) are usable.
      Decision dec = map_dfa_decision(dfa_pair_sync(strip_to_internal_dfa(m)),
                                      internal_dfa_letter_map(m));
      dec.procedure = kProcZeroTurnDfa;
      return dec;
    }
    return zero_turn_reach(m, model == SyncModel::Same, budget);
  }

  // Rule 4: positive bounds go through the indexed product.
  if (turn_bound) return turn_product_decide(m, model, *turn_bound, budget);

  // Rule 5: very visibly automata push state-independent symbols, so all
  // stacks stay equal and the three models collapse — except that with no
  // returns the stack can never empty, so the Empty model keeps its own rule.
  if (model != SyncModel::Empty && classify(m).very_visibly) {
    Decision dec;
    if (has_ret) {
      dec = sync_empty_pairwise(m, budget);
    } else {
      dec = map_dfa_decision(dfa_pair_sync(collapse_calls_dfa(m)),
                             identity_letter_map(m));
    }
    dec.procedure = kProcVvEquivalence;
    return dec;
  }

  // Rule 6: empty-stack model.
  if (model == SyncModel::Empty) {
    if (has_ret) return sync_empty_pairwise(m, budget);
    // Without returns no call is ever undone, so the word must avoid calls.
    Decision dec = map_dfa_decision(dfa_pair_sync(strip_to_internal_dfa(m)),
                                    internal_dfa_letter_map(m));
    dec.procedure = kProcPairwiseEmpty;
    return dec;
  }

  // Rule 7: with returns available, an equal-stack witness can be extended to
  // empty the stacks, so the Same answer equals the Empty answer.
  if (model == SyncModel::Same && has_ret) {
    Decision dec = sync_empty_pairwise(m, budget);
    dec.procedure = kProcSameReturnReduction;
    return dec;
  }

  // Rule 8: without returns every word is 0-turn.
  if (model == SyncModel::Same) return zero_turn_reach(m, true, budget);

  // Rule 9: stacks are unconstrained and never popped; only states matter.
  if (!has_ret) {
    Decision dec = map_dfa_decision(dfa_pair_sync(collapse_calls_dfa(m)),
                                    identity_letter_map(m));
    dec.procedure = kProcArbNoReturnDfa;
    return dec;
  }

  // Rule 10: exponential fallback.
  return full_product_decide(m, SyncModel::Arbitrary, budget);
}

}  // namespace visync
