// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#include "oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "util.hpp"

namespace visync {

namespace {

struct Node {
  std::vector<std::uint32_t> key;
  std::uint32_t parent;
  LetterIdx letter;
  std::uint32_t depth;
};

// Key layout, k = nstates, h = shared stack height above the bottom marker:
//   [0, k)              current state of each run
//   [k]                 h
//   [k+1, k+1+k*h)      per-run stack contents above bottom, bottom-to-top
//   +2 when turn-bounded: turns so far, last height-change sign + 1

bool key_is_goal(const std::vector<std::uint32_t>& key, std::uint32_t k,
                 SyncModel model) {
  for (std::uint32_t j = 1; j < k; ++j)
    if (key[j] != key[0]) return false;
  std::uint32_t h = key[k];
  if (model == SyncModel::Arbitrary) return true;
  if (model == SyncModel::Empty) return h == 0;
  // Same: the flattened stack segments must agree pairwise.
  for (std::uint32_t j = 1; j < k; ++j)
    for (std::uint32_t d = 0; d < h; ++d)
      if (key[k + 1 + j * h + d] != key[k + 1 + d]) return false;
  return true;
}

}  // namespace

OracleResult oracle_search(const Dvpda& m, SyncModel model,
                           std::optional<std::uint32_t> turn_bound,
                           std::uint32_t limit, std::uint64_t budget) {
  require_valid(m);
  OracleResult res;
  const std::uint32_t k = m.nstates();
  const bool bounded = turn_bound.has_value();

  std::vector<Node> nodes;
  std::unordered_set<std::vector<std::uint32_t>, VecU32Hash> visited;

  std::vector<std::uint32_t> root(k + 1 + (bounded ? 2 : 0), 0);
  for (std::uint32_t j = 0; j < k; ++j) root[j] = j;
  if (bounded) root[k + 2] = 1;  // last sign slot stores sign + 1; 1 means none yet
  visited.insert(root);
  nodes.push_back({std::move(root), kNone, 0, 0});

  for (std::size_t at = 0; at < nodes.size(); ++at) {
    if (key_is_goal(nodes[at].key, k, model)) {
      Word w;
      for (std::uint32_t cur = static_cast<std::uint32_t>(at);
           nodes[cur].parent != kNone; cur = nodes[cur].parent)
        w.push_back(nodes[cur].letter);
      std::reverse(w.begin(), w.end());
      res.outcome = OracleOutcome::Found;
      res.word = std::move(w);
      res.explored = nodes.size();
      return res;
    }
    if (nodes[at].depth >= limit) continue;
    for (std::uint32_t a = 0; a < m.ab.size(); ++a) {
      const std::vector<std::uint32_t>& key = nodes[at].key;
      const std::uint32_t h = key[k];
      std::vector<std::uint32_t> nk;
      int delta = 0;
      switch (m.ab.kind[a]) {
        case LetterKind::Internal: {
          nk = key;
          std::uint32_t i = m.ab.pos[a];
          for (std::uint32_t j = 0; j < k; ++j) nk[j] = m.int_next(key[j], i);
          break;
        }
        case LetterKind::Call: {
          std::uint32_t c = m.ab.pos[a];
          nk.assign(key.size() + k, 0);
          for (std::uint32_t j = 0; j < k; ++j) nk[j] = m.call_next(key[j], c);
          nk[k] = h + 1;
          for (std::uint32_t j = 0; j < k; ++j) {
            for (std::uint32_t d = 0; d < h; ++d)
              nk[k + 1 + j * (h + 1) + d] = key[k + 1 + j * h + d];
            nk[k + 1 + j * (h + 1) + h] = m.call_sym(key[j], c);
          }
          if (bounded) {
            nk[nk.size() - 2] = key[key.size() - 2];
            nk[nk.size() - 1] = key[key.size() - 1];
          }
          delta = 1;
          break;
        }
        case LetterKind::Return: {
          std::uint32_t r = m.ab.pos[a];
          if (h == 0) {
            nk = key;
            for (std::uint32_t j = 0; j < k; ++j)
              nk[j] = m.ret_next(key[j], r, kBottom);
          } else {
            nk.assign(key.size() - k, 0);
            for (std::uint32_t j = 0; j < k; ++j)
              nk[j] = m.ret_next(key[j], r, key[k + 1 + j * h + (h - 1)]);
            nk[k] = h - 1;
            for (std::uint32_t j = 0; j < k; ++j)
              for (std::uint32_t d = 0; d + 1 < h; ++d)
                nk[k + 1 + j * (h - 1) + d] = key[k + 1 + j * h + d];
            if (bounded) {
              nk[nk.size() - 2] = key[key.size() - 2];
              nk[nk.size() - 1] = key[key.size() - 1];
            }
            delta = -1;
          }
          break;
        }
      }
      if (bounded && delta != 0) {
        std::uint32_t turns = nk[nk.size() - 2];
        std::uint32_t last = nk[nk.size() - 1];  // sign + 1
        std::uint32_t sign = delta > 0 ? 2 : 0;
        if (last != 1 && last != sign) ++turns;
        if (turns > *turn_bound) continue;  // prune over-budget turns
        nk[nk.size() - 2] = turns;
        nk[nk.size() - 1] = sign;
      }
      if (!visited.insert(nk).second) continue;
      nodes.push_back({std::move(nk), static_cast<std::uint32_t>(at), a,
                       nodes[at].depth + 1});
      if (nodes.size() > budget) {
        res.outcome = OracleOutcome::BudgetExceeded;
        res.explored = nodes.size();
        return res;
      }
    }
  }
  res.outcome = OracleOutcome::NoneWithin;
  res.explored = nodes.size();
  return res;
}

}  // namespace visync
