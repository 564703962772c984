// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "errors.hpp"
#include "util.hpp"

#ifndef VISYNC_FIXTURES_DIR
#error "VISYNC_FIXTURES_DIR must point at the fixture directory"
#endif

namespace visync::testsupport {

std::string fixture_path(const std::string& name) {
  return std::string(VISYNC_FIXTURES_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

ParsedObject load_fixture(const std::string& name) {
  return parse_text(read_file(fixture_path(name)));
}

Dvpda make_m1() {
  Dvpda m;
  m.state_names = {"0", "1"};
  m.sym_names = {"BOT", "X"};
  m.ab = make_alphabet({"a"}, {"b"}, {"d"});
  m.call_target = {1, 1};
  m.call_push = {1, 1};
  m.int_target = {1, 0};
  // [(q * 1 + 0) * 2 + g]: q=0: BOT->0, X->0; q=1: BOT->1, X->0.
  m.ret_target = {0, 0, 1, 0};
  return m;
}

Dfa make_cerny(std::uint32_t n) {
  Dfa d;
  d.state_names = numeric_names(n);
  d.letter_names = {"a", "b"};
  d.target.resize(2 * n);
  for (StateIdx q = 0; q < n; ++q) {
    d.target[q * 2 + 0] = q == 0 ? 1 : q;
    d.target[q * 2 + 1] = (q + 1) % n;
  }
  return d;
}

namespace {

std::vector<std::string> prefixed_names(const std::string& prefix, std::uint32_t count) {
  std::vector<std::string> out;
  for (std::uint32_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

Dvpda random_dvpda(std::mt19937& rng, const DvpdaParams& p) {
  std::uint32_t n = 1 + rng() % p.max_states;
  std::uint32_t nc = p.forbid_call ? 0 : rng() % (p.max_calls + 1);
  std::uint32_t ni = rng() % (p.max_ints + 1);
  std::uint32_t nr = p.forbid_return ? 0 : rng() % (p.max_rets + 1);
  if (p.force_call && nc == 0) nc = 1;
  if (p.force_return && nr == 0) nr = 1;
  if (nc + ni + nr == 0) ni = 1;
  std::uint32_t nsyms = nc > 0 ? 2 + rng() % (p.max_syms - 1) : 1;

  static const char* kSyms[] = {"X", "Y", "Z", "W"};
  Dvpda m;
  m.state_names = numeric_names(n);
  m.sym_names.push_back("BOT");
  for (std::uint32_t g = 1; g < nsyms; ++g) m.sym_names.push_back(kSyms[g - 1]);
  m.ab = make_alphabet(prefixed_names("c", nc), prefixed_names("i", ni),
                       prefixed_names("r", nr));

  m.call_target.resize(std::size_t{n} * nc);
  m.call_push.resize(std::size_t{n} * nc);
  for (std::uint32_t c = 0; c < nc; ++c) {
    SymIdx shared = 1 + rng() % (nsyms - 1);
    for (StateIdx q = 0; q < n; ++q) {
      m.call_target[q * nc + c] = rng() % n;
      m.call_push[q * nc + c] = p.very_visibly ? shared : 1 + rng() % (nsyms - 1);
    }
  }
  m.int_target.resize(std::size_t{n} * ni);
  for (auto& t : m.int_target) t = rng() % n;
  m.ret_target.resize(std::size_t{n} * nr * nsyms);
  for (auto& t : m.ret_target) t = rng() % n;

  if (p.with_language) {
    m.initial = rng() % n;
    for (StateIdx q = 0; q < n; ++q)
      if (rng() % 2 == 0) m.finals.push_back(q);
  }
  return m;
}

Dfa random_dfa(std::mt19937& rng, std::uint32_t max_states, std::uint32_t max_letters,
               bool with_subset) {
  static const char* kLetters[] = {"x", "y", "z", "u", "v", "w"};
  std::uint32_t n = 1 + rng() % max_states;
  std::uint32_t k = 1 + rng() % max_letters;
  Dfa d;
  d.state_names = numeric_names(n);
  for (std::uint32_t a = 0; a < k; ++a) d.letter_names.push_back(kLetters[a]);
  d.target.resize(std::size_t{n} * k);
  for (auto& t : d.target) t = rng() % n;
  if (with_subset) {
    std::uint32_t mask = 1 + rng() % ((1u << n) - 1);
    for (StateIdx q = 0; q < n; ++q)
      if (mask & (1u << q)) d.subset.push_back(q);
  }
  return d;
}

Vst random_visibly_vst(std::mt19937& rng, std::uint32_t max_states, std::uint32_t max_in,
                       std::uint32_t max_outlen, bool very) {
  static const char* kIn[] = {"a", "b", "c", "d"};
  std::uint32_t n = 1 + rng() % max_states;
  std::uint32_t k = 1 + rng() % max_in;
  Vst t;
  t.state_names = numeric_names(n);
  for (std::uint32_t a = 0; a < k; ++a) t.in_names.push_back(kIn[a]);
  t.out_names = {"X", "Y"};
  t.target.resize(std::size_t{n} * k);
  t.output.resize(std::size_t{n} * k);
  for (std::uint32_t a = 0; a < k; ++a) {
    std::uint32_t len = rng() % (max_outlen + 1);
    std::vector<std::uint32_t> shared;
    for (std::uint32_t j = 0; j < len; ++j) shared.push_back(rng() % 2);
    for (StateIdx q = 0; q < n; ++q) {
      t.target[q * k + a] = rng() % n;
      if (very) {
        t.output[q * k + a] = shared;
      } else {
        std::vector<std::uint32_t> word;
        for (std::uint32_t j = 0; j < len; ++j) word.push_back(rng() % 2);
        t.output[q * k + a] = word;
      }
    }
  }
  return t;
}

std::vector<bool> naive_wm(const Dvpda& m) {
  const std::uint32_t n = m.nstates();
  std::vector<bool> w(std::size_t{n} * n, false);
  for (StateIdx q = 0; q < n; ++q) w[q * n + q] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    auto set = [&](StateIdx p, StateIdx q) {
      if (!w[p * n + q]) {
        w[p * n + q] = true;
        changed = true;
      }
    };
    for (StateIdx p = 0; p < n; ++p)
      for (StateIdx q = 0; q < n; ++q) {
        if (!w[p * n + q]) continue;
        for (std::uint32_t i = 0; i < m.ab.nint(); ++i) set(p, m.int_next(q, i));
        for (std::uint32_t c = 0; c < m.ab.ncall(); ++c) {
          StateIdx s = m.call_next(q, c);
          SymIdx g = m.call_sym(q, c);
          for (StateIdx s2 = 0; s2 < n; ++s2) {
            if (!w[s * n + s2]) continue;
            for (std::uint32_t r = 0; r < m.ab.nret(); ++r) set(p, m.ret_next(s2, r, g));
          }
        }
        for (StateIdx q2 = 0; q2 < n; ++q2)
          if (w[q * n + q2]) set(p, q2);
      }
  }
  return w;
}

namespace {

void enumerate_wm_rec(const Dvpda& m, std::vector<Config>& cfgs, std::uint32_t left,
                      std::vector<bool>& pairs) {
  const std::uint32_t n = m.nstates();
  if (cfgs[0].stack_is_bottom_only())
    for (StateIdx p = 0; p < n; ++p) pairs[p * n + cfgs[p].state] = true;
  if (left == 0) return;
  const std::uint32_t height = static_cast<std::uint32_t>(cfgs[0].stack.size()) - 1;
  for (LetterIdx a = 0; a < m.ab.size(); ++a) {
    if (m.ab.kind[a] == LetterKind::Return && height == 0) continue;  // would read below
    std::vector<Config> next = cfgs;
    for (auto& cfg : next) step(m, cfg, a);
    enumerate_wm_rec(m, next, left - 1, pairs);
  }
}

}  // namespace

std::vector<bool> enumerate_wm_pairs(const Dvpda& m, std::uint32_t len) {
  const std::uint32_t n = m.nstates();
  std::vector<bool> pairs(std::size_t{n} * n, false);
  std::vector<Config> cfgs(n);
  for (StateIdx q = 0; q < n; ++q) cfgs[q].state = q;
  enumerate_wm_rec(m, cfgs, len, pairs);
  return pairs;
}

bool naive_language_empty(const Dvpda& m, AcceptanceMode mode) {
  const std::uint32_t n = m.nstates();
  std::vector<bool> w = naive_wm(m);
  std::vector<bool> bottom(n, false), reach(n, false);
  bottom[m.initial.value_or(0)] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (StateIdx q = 0; q < n; ++q) {
      if (!bottom[q]) continue;
      for (StateIdx q2 = 0; q2 < n; ++q2)
        if (w[q * n + q2] && !bottom[q2]) bottom[q2] = changed = true;
      for (std::uint32_t r = 0; r < m.ab.nret(); ++r) {
        StateIdx q2 = m.ret_next(q, r, kBottom);
        if (!bottom[q2]) bottom[q2] = changed = true;
      }
    }
  }
  reach = bottom;
  changed = true;
  while (changed) {
    changed = false;
    for (StateIdx q = 0; q < n; ++q) {
      if (!reach[q]) continue;
      for (StateIdx q2 = 0; q2 < n; ++q2)
        if (w[q * n + q2] && !reach[q2]) reach[q2] = changed = true;
      for (std::uint32_t c = 0; c < m.ab.ncall(); ++c) {
        StateIdx q2 = m.call_next(q, c);
        if (!reach[q2]) reach[q2] = changed = true;
      }
    }
  }
  const std::vector<bool>& hit = mode == AcceptanceMode::FinalStateEmptyStack ? bottom : reach;
  for (StateIdx f : m.finals)
    if (hit[f]) return false;
  return true;
}

BruteSearch brute_accepting_word(const Dvpda& m, AcceptanceMode mode, std::uint32_t depth) {
  struct Node {
    Config cfg;
    std::uint32_t parent;
    LetterIdx letter;
    std::uint32_t depth;
  };
  auto accepts = [&](const Config& cfg) {
    return m.is_final(cfg.state) &&
           (mode == AcceptanceMode::FinalState || cfg.stack_is_bottom_only());
  };
  auto key_of = [](const Config& cfg) {
    std::vector<std::uint32_t> key;
    key.push_back(cfg.state);
    key.insert(key.end(), cfg.stack.begin(), cfg.stack.end());
    return key;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::vector<std::uint32_t>, VecU32Hash> seen;
  Config root;
  root.state = m.initial.value_or(0);
  nodes.push_back({root, kNone, 0, 0});
  seen.insert(key_of(root));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Node node = nodes[i];
    if (accepts(node.cfg)) {
      Word word;
      for (std::uint32_t j = static_cast<std::uint32_t>(i); nodes[j].parent != kNone;
           j = nodes[j].parent)
        word.push_back(nodes[j].letter);
      std::reverse(word.begin(), word.end());
      return {true, word};
    }
    if (node.depth == depth) continue;
    for (LetterIdx a = 0; a < m.ab.size(); ++a) {
      Config next = node.cfg;
      step(m, next, a);
      if (seen.insert(key_of(next)).second)
        nodes.push_back({next, static_cast<std::uint32_t>(i), a, node.depth + 1});
    }
  }
  return {};
}

namespace {

BruteSearch brute_set_search(const Dfa& d, std::vector<StateIdx> start,
                             bool (*goal)(const std::vector<StateIdx>&, const Dfa&)) {
  struct Node {
    std::vector<StateIdx> set;
    std::uint32_t parent;
    LetterIdx letter;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::vector<StateIdx>, VecU32Hash> seen;
  nodes.push_back({std::move(start), kNone, 0});
  seen.insert(nodes[0].set);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (goal(nodes[i].set, d)) {
      Word word;
      for (std::uint32_t j = static_cast<std::uint32_t>(i); nodes[j].parent != kNone;
           j = nodes[j].parent)
        word.push_back(nodes[j].letter);
      std::reverse(word.begin(), word.end());
      return {true, word};
    }
    for (LetterIdx a = 0; a < d.nletters(); ++a) {
      std::vector<StateIdx> image;
      for (StateIdx q : nodes[i].set) image.push_back(d.next(q, a));
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (seen.insert(image).second)
        nodes.push_back({std::move(image), static_cast<std::uint32_t>(i), a});
    }
  }
  return {};
}

}  // namespace

BruteSearch brute_into_subset(const Dfa& d) {
  std::vector<StateIdx> all(d.nstates());
  for (StateIdx q = 0; q < d.nstates(); ++q) all[q] = q;
  return brute_set_search(d, std::move(all), [](const std::vector<StateIdx>& set, const Dfa& m) {
    for (StateIdx q : set)
      if (!std::binary_search(m.subset.begin(), m.subset.end(), q)) return false;
    return true;
  });
}

BruteSearch brute_from_subset(const Dfa& d) {
  return brute_set_search(d, d.subset, [](const std::vector<StateIdx>& set, const Dfa&) {
    return set.size() == 1;
  });
}

Dvpda final_empty_probe(const Dvpda& m) {
  auto names_of = [&](const std::vector<LetterIdx>& idxs) {
    std::vector<std::string> out;
    for (LetterIdx a : idxs) out.push_back(m.ab.names[a]);
    return out;
  };
  std::string fresh = "end";
  while (m.ab.index_of(fresh) != kNone) fresh += "_";
  auto fresh_state = [&](std::string name) {
    while (std::find(m.state_names.begin(), m.state_names.end(), name) != m.state_names.end())
      name += "_";
    return name;
  };

  const std::uint32_t n = m.nstates();
  const std::uint32_t nc = m.ab.ncall();
  const std::uint32_t ni = m.ab.nint();
  const std::uint32_t nr = m.ab.nret();
  const std::uint32_t nsyms = m.nsyms();
  const StateIdx acc = n, rej = n + 1;

  Dvpda out;
  out.state_names = m.state_names;
  out.state_names.push_back(fresh_state("ACC"));
  out.state_names.push_back(fresh_state("REJ"));
  out.sym_names = m.sym_names;
  std::vector<std::string> rets = names_of(m.ab.rets);
  rets.push_back(fresh);
  out.ab = make_alphabet(names_of(m.ab.calls), names_of(m.ab.ints), rets);

  out.call_target.assign(std::size_t{n + 2} * nc, 0);
  out.call_push.assign(std::size_t{n + 2} * nc, nc > 0 ? 1 : 0);
  out.int_target.assign(std::size_t{n + 2} * ni, 0);
  out.ret_target.assign(std::size_t{n + 2} * (nr + 1) * nsyms, 0);
  for (StateIdx q = 0; q < n + 2; ++q) {
    for (std::uint32_t c = 0; c < nc; ++c) {
      out.call_target[q * nc + c] = q < n ? m.call_next(q, c) : q;
      out.call_push[q * nc + c] = q < n ? m.call_sym(q, c) : 1;
    }
    for (std::uint32_t i = 0; i < ni; ++i)
      out.int_target[q * ni + i] = q < n ? m.int_next(q, i) : q;
    for (std::uint32_t r = 0; r <= nr; ++r)
      for (SymIdx g = 0; g < nsyms; ++g) {
        StateIdx t;
        if (q >= n)
          t = q;
        else if (r < nr)
          t = m.ret_next(q, r, g);
        else
          t = (g == kBottom && m.is_final(q)) ? acc : rej;
        out.ret_target[(q * (nr + 1) + r) * nsyms + g] = t;
      }
  }
  out.initial = m.initial;
  out.finals = {acc};
  return out;
}

namespace {

bool trace_words_equal(const Vst& t, const Word& w) {
  StateIdx first_state = 0;
  std::vector<std::uint32_t> first_out;
  for (StateIdx q = 0; q < t.nstates(); ++q) {
    StateIdx s = q;
    std::vector<std::uint32_t> out;
    for (LetterIdx a : w) {
      const auto& block = t.out(s, a);
      out.insert(out.end(), block.begin(), block.end());
      s = t.next(s, a);
    }
    if (q == 0) {
      first_state = s;
      first_out = out;
    } else if (s != first_state || out != first_out) {
      return false;
    }
  }
  return true;
}

bool trace_dfs(const Vst& t, Word& word, std::uint32_t left, BruteSearch& result) {
  if (left == 0) {
    if (!trace_words_equal(t, word)) return false;
    result.found = true;
    result.word = word;
    return true;
  }
  for (LetterIdx a = 0; a < t.nin(); ++a) {
    word.push_back(a);
    if (trace_dfs(t, word, left - 1, result)) return true;
    word.pop_back();
  }
  return false;
}

}  // namespace

BruteSearch simulate_trace_sync(const Vst& t, std::uint32_t depth) {
  BruteSearch result;
  for (std::uint32_t len = 0; len <= depth; ++len) {
    Word word;
    if (trace_dfs(t, word, len, result)) return result;
  }
  return result;
}

bool check_trace_witness(const Vst& t, const Word& w) { return trace_words_equal(t, w); }

}  // namespace visync::testsupport
