// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#include "parser.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>

#include "errors.hpp"

namespace visync {

namespace {

struct Line {
  std::size_t no = 0;
  std::vector<std::string> toks;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    ++line_no;
    std::string raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    Line ln;
    ln.no = line_no;
    std::istringstream ss(raw);
    std::string tok;
    while (ss >> tok) ln.toks.push_back(std::move(tok));
    if (!ln.toks.empty()) out.push_back(std::move(ln));
    if (eol == text.size()) break;
  }
  return out;
}

std::uint32_t parse_num(std::size_t line_no, const std::string& tok, std::uint64_t limit,
                        const char* what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line_no, std::string("expected a number for ") + what + ", got '" + tok + "'");
  if (v >= limit)
    throw ParseError(line_no, std::string(what) + " " + tok + " is out of range");
  return static_cast<std::uint32_t>(v);
}

void expect_arrow(const Line& ln, std::size_t idx) {
  if (idx >= ln.toks.size() || ln.toks[idx] != "->")
    throw ParseError(ln.no, "expected '->' in transition row");
}

constexpr std::uint64_t kMaxStates = 1u << 20;

struct SectionOnce {
  bool seen = false;
  void mark(const Line& ln, const char* name) {
    if (seen) throw ParseError(ln.no, std::string("duplicate '") + name + "' line");
    seen = true;
  }
};

Dvpda parse_dvpda(const std::vector<Line>& lines) {
  Dvpda m;
  SectionOnce s_states, s_stack, s_calls, s_ints, s_rets, s_initial, s_finals;
  std::vector<std::string> calls, ints, rets;
  std::vector<const Line*> rows;
  const Line* initial_ln = nullptr;
  const Line* finals_ln = nullptr;
  std::uint32_t n = 0;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& ln = lines[li];
    const std::string& kw = ln.toks[0];
    if (kw == "states") {
      s_states.mark(ln, "states");
      if (ln.toks.size() != 2) throw ParseError(ln.no, "expected 'states <count>'");
      n = parse_num(ln.no, ln.toks[1], kMaxStates, "state count");
    } else if (kw == "stack") {
      s_stack.mark(ln, "stack");
      if (ln.toks.size() < 2)
        throw ParseError(ln.no, "expected 'stack <bottom> [symbols...]'");
      m.sym_names.assign(ln.toks.begin() + 1, ln.toks.end());
    } else if (kw == "calls") {
      s_calls.mark(ln, "calls");
      calls.assign(ln.toks.begin() + 1, ln.toks.end());
    } else if (kw == "ints") {
      s_ints.mark(ln, "ints");
      ints.assign(ln.toks.begin() + 1, ln.toks.end());
    } else if (kw == "rets") {
      s_rets.mark(ln, "rets");
      rets.assign(ln.toks.begin() + 1, ln.toks.end());
    } else if (kw == "c" || kw == "i" || kw == "r") {
      rows.push_back(&ln);
    } else if (kw == "initial") {
      s_initial.mark(ln, "initial");
      if (ln.toks.size() != 2) throw ParseError(ln.no, "expected 'initial <state>'");
      initial_ln = &ln;
    } else if (kw == "finals") {
      s_finals.mark(ln, "finals");
      finals_ln = &ln;
    } else {
      throw ParseError(ln.no, "unknown directive '" + kw + "'");
    }
  }

  if (!s_states.seen) throw ParseError(lines.back().no, "missing 'states' line");
  if (m.sym_names.empty()) m.sym_names = {"BOT"};

  m.state_names.resize(n);
  for (std::uint32_t q = 0; q < n; ++q) m.state_names[q] = std::to_string(q);

  for (const auto& nm : calls) {
    m.ab.kind.push_back(LetterKind::Call);
    m.ab.pos.push_back(static_cast<std::uint32_t>(m.ab.calls.size()));
    m.ab.calls.push_back(static_cast<LetterIdx>(m.ab.names.size()));
    m.ab.names.push_back(nm);
  }
  for (const auto& nm : ints) {
    m.ab.kind.push_back(LetterKind::Internal);
    m.ab.pos.push_back(static_cast<std::uint32_t>(m.ab.ints.size()));
    m.ab.ints.push_back(static_cast<LetterIdx>(m.ab.names.size()));
    m.ab.names.push_back(nm);
  }
  for (const auto& nm : rets) {
    m.ab.kind.push_back(LetterKind::Return);
    m.ab.pos.push_back(static_cast<std::uint32_t>(m.ab.rets.size()));
    m.ab.rets.push_back(static_cast<LetterIdx>(m.ab.names.size()));
    m.ab.names.push_back(nm);
  }

  const std::uint32_t nc = m.ab.ncall(), ni = m.ab.nint(), nr = m.ab.nret(), ns = m.nsyms();
  m.call_target.assign(static_cast<std::size_t>(n) * nc, kNone);
  m.call_push.assign(static_cast<std::size_t>(n) * nc, kNone);
  m.int_target.assign(static_cast<std::size_t>(n) * ni, kNone);
  m.ret_target.assign(static_cast<std::size_t>(n) * nr * ns, kNone);

  auto letter_in_class = [&](const Line& ln, const std::string& nm, LetterKind want,
                             const char* cls) -> std::uint32_t {
    std::uint32_t g = m.ab.index_of(nm);
    if (g == kNone) throw ParseError(ln.no, "unknown letter '" + nm + "'");
    if (m.ab.kind[g] != want)
      throw ParseError(ln.no, "letter '" + nm + "' is not declared in '" + cls + "'");
    return m.ab.pos[g];
  };
  auto sym_index = [&](const Line& ln, const std::string& nm) -> SymIdx {
    for (std::uint32_t g = 0; g < ns; ++g)
      if (m.sym_names[g] == nm) return g;
    throw ParseError(ln.no, "unknown stack symbol '" + nm + "'");
  };

  for (const Line* lp : rows) {
    const Line& ln = *lp;
    const std::string& kw = ln.toks[0];
    if (kw == "c") {
      // c <q> <letter> -> <q'> push <sym>
      if (ln.toks.size() != 7 || ln.toks[5] != "push")
        throw ParseError(ln.no, "expected 'c <state> <letter> -> <state> push <symbol>'");
      expect_arrow(ln, 3);
      StateIdx q = parse_num(ln.no, ln.toks[1], n, "state");
      std::uint32_t c = letter_in_class(ln, ln.toks[2], LetterKind::Call, "calls");
      StateIdx t = parse_num(ln.no, ln.toks[4], n, "state");
      SymIdx g = sym_index(ln, ln.toks[6]);
      std::size_t at = static_cast<std::size_t>(q) * nc + c;
      if (m.call_target[at] != kNone) throw ParseError(ln.no, "duplicate call row");
      m.call_target[at] = t;
      m.call_push[at] = g;
    } else if (kw == "i") {
      // i <q> <letter> -> <q'>
      if (ln.toks.size() != 5)
        throw ParseError(ln.no, "expected 'i <state> <letter> -> <state>'");
      expect_arrow(ln, 3);
      StateIdx q = parse_num(ln.no, ln.toks[1], n, "state");
      std::uint32_t i = letter_in_class(ln, ln.toks[2], LetterKind::Internal, "ints");
      StateIdx t = parse_num(ln.no, ln.toks[4], n, "state");
      std::size_t at = static_cast<std::size_t>(q) * ni + i;
      if (m.int_target[at] != kNone) throw ParseError(ln.no, "duplicate internal row");
      m.int_target[at] = t;
    } else {
      // r <q> <letter> <sym> -> <q'>
      if (ln.toks.size() != 6)
        throw ParseError(ln.no, "expected 'r <state> <letter> <symbol> -> <state>'");
      expect_arrow(ln, 4);
      StateIdx q = parse_num(ln.no, ln.toks[1], n, "state");
      std::uint32_t r = letter_in_class(ln, ln.toks[2], LetterKind::Return, "rets");
      SymIdx g = sym_index(ln, ln.toks[3]);
      StateIdx t = parse_num(ln.no, ln.toks[5], n, "state");
      std::size_t at = (static_cast<std::size_t>(q) * nr + r) * ns + g;
      if (m.ret_target[at] != kNone) throw ParseError(ln.no, "duplicate return row");
      m.ret_target[at] = t;
    }
  }

  if (initial_ln)
    m.initial = parse_num(initial_ln->no, initial_ln->toks[1], n, "state");
  if (finals_ln) {
    for (std::size_t i = 1; i < finals_ln->toks.size(); ++i)
      m.finals.push_back(parse_num(finals_ln->no, finals_ln->toks[i], n, "state"));
    std::sort(m.finals.begin(), m.finals.end());
    if (std::adjacent_find(m.finals.begin(), m.finals.end()) != m.finals.end())
      throw ParseError(finals_ln->no, "state listed twice in finals");
  }
  return m;
}

Dfa parse_dfa(const std::vector<Line>& lines) {
  Dfa d;
  SectionOnce s_states, s_letters, s_subset;
  std::vector<const Line*> rows;
  const Line* subset_ln = nullptr;
  std::uint32_t n = 0;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& ln = lines[li];
    const std::string& kw = ln.toks[0];
    if (kw == "states") {
      s_states.mark(ln, "states");
      if (ln.toks.size() != 2) throw ParseError(ln.no, "expected 'states <count>'");
      n = parse_num(ln.no, ln.toks[1], kMaxStates, "state count");
    } else if (kw == "letters") {
      s_letters.mark(ln, "letters");
      d.letter_names.assign(ln.toks.begin() + 1, ln.toks.end());
    } else if (kw == "t") {
      rows.push_back(&ln);
    } else if (kw == "subset") {
      s_subset.mark(ln, "subset");
      subset_ln = &ln;
    } else {
      throw ParseError(ln.no, "unknown directive '" + kw + "'");
    }
  }

  if (!s_states.seen) throw ParseError(lines.back().no, "missing 'states' line");
  d.state_names.resize(n);
  for (std::uint32_t q = 0; q < n; ++q) d.state_names[q] = std::to_string(q);
  const std::uint32_t na = d.nletters();
  d.target.assign(static_cast<std::size_t>(n) * na, kNone);

  for (const Line* lp : rows) {
    const Line& ln = *lp;
    // t <q> <letter> -> <q'>
    if (ln.toks.size() != 5) throw ParseError(ln.no, "expected 't <state> <letter> -> <state>'");
    expect_arrow(ln, 3);
    StateIdx q = parse_num(ln.no, ln.toks[1], n, "state");
    std::uint32_t a = kNone;
    for (std::uint32_t k = 0; k < na; ++k)
      if (d.letter_names[k] == ln.toks[2]) {
        a = k;
        break;
      }
    if (a == kNone) throw ParseError(ln.no, "unknown letter '" + ln.toks[2] + "'");
    StateIdx t = parse_num(ln.no, ln.toks[4], n, "state");
    std::size_t at = static_cast<std::size_t>(q) * na + a;
    if (d.target[at] != kNone) throw ParseError(ln.no, "duplicate row");
    d.target[at] = t;
  }

  if (subset_ln) {
    for (std::size_t i = 1; i < subset_ln->toks.size(); ++i)
      d.subset.push_back(parse_num(subset_ln->no, subset_ln->toks[i], n, "state"));
    std::sort(d.subset.begin(), d.subset.end());
    if (std::adjacent_find(d.subset.begin(), d.subset.end()) != d.subset.end())
      throw ParseError(subset_ln->no, "state listed twice in subset");
  }
  return d;
}

Vst parse_vst(const std::vector<Line>& lines) {
  Vst t;
  SectionOnce s_states, s_in, s_out;
  std::vector<const Line*> rows;
  std::uint32_t n = 0;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& ln = lines[li];
    const std::string& kw = ln.toks[0];
    if (kw == "states") {
      s_states.mark(ln, "states");
      if (ln.toks.size() != 2) throw ParseError(ln.no, "expected 'states <count>'");
      n = parse_num(ln.no, ln.toks[1], kMaxStates, "state count");
    } else if (kw == "in") {
      s_in.mark(ln, "in");
      t.in_names.assign(ln.toks.begin() + 1, ln.toks.end());
    } else if (kw == "out") {
      s_out.mark(ln, "out");
      for (std::size_t i = 1; i < ln.toks.size(); ++i) {
        if (ln.toks[i].size() != 1)
          throw ParseError(ln.no, "output symbols must be single characters, got '" +
                                      ln.toks[i] + "'");
        t.out_names.push_back(ln.toks[i]);
      }
    } else if (kw == "t") {
      rows.push_back(&ln);
    } else if (kw == "initial" || kw == "finals") {
      // Accepted for compatibility with the shared file shape; trace
      // synchronization does not use designated states.
      for (std::size_t i = 1; i < ln.toks.size(); ++i)
        parse_num(ln.no, ln.toks[i], kMaxStates, "state");
    } else {
      throw ParseError(ln.no, "unknown directive '" + kw + "'");
    }
  }

  if (!s_states.seen) throw ParseError(lines.back().no, "missing 'states' line");
  t.state_names.resize(n);
  for (std::uint32_t q = 0; q < n; ++q) t.state_names[q] = std::to_string(q);
  const std::uint32_t na = t.nin();
  t.target.assign(static_cast<std::size_t>(n) * na, kNone);
  t.output.assign(static_cast<std::size_t>(n) * na, {});

  for (const Line* lp : rows) {
    const Line& ln = *lp;
    // t <q> <letter> -> <q'> emit <token>
    if (ln.toks.size() != 7 || ln.toks[5] != "emit")
      throw ParseError(ln.no, "expected 't <state> <letter> -> <state> emit <word|eps>'");
    expect_arrow(ln, 3);
    StateIdx q = parse_num(ln.no, ln.toks[1], n, "state");
    std::uint32_t a = kNone;
    for (std::uint32_t k = 0; k < na; ++k)
      if (t.in_names[k] == ln.toks[2]) {
        a = k;
        break;
      }
    if (a == kNone) throw ParseError(ln.no, "unknown input letter '" + ln.toks[2] + "'");
    StateIdx tgt = parse_num(ln.no, ln.toks[4], n, "state");
    std::size_t at = static_cast<std::size_t>(q) * na + a;
    if (t.target[at] != kNone) throw ParseError(ln.no, "duplicate row");
    t.target[at] = tgt;
    const std::string& tok = ln.toks[6];
    if (tok != "eps") {
      for (char ch : tok) {
        std::uint32_t s = kNone;
        for (std::uint32_t k = 0; k < t.out_names.size(); ++k)
          if (t.out_names[k][0] == ch) {
            s = k;
            break;
          }
        if (s == kNone)
          throw ParseError(ln.no, std::string("unknown output symbol '") + ch + "'");
        t.output[at].push_back(s);
      }
    }
  }
  return t;
}

}  // namespace

ParsedObject parse_text(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  const Line& head = lines[0];
  if (head.toks.size() != 1)
    throw ParseError(head.no, "expected a bare format line ('dvpda', 'dfa' or 'vst')");
  const std::string& fmt = head.toks[0];
  if (fmt == "dvpda") return parse_dvpda(lines);
  if (fmt == "dfa") return parse_dfa(lines);
  if (fmt == "vst") return parse_vst(lines);
  throw ParseError(head.no, "unknown format '" + fmt + "'");
}

std::string serialize(const Dvpda& m) {
  std::ostringstream out;
  out << "dvpda\n";
  out << "states " << m.nstates() << "\n";
  out << "stack";
  for (const auto& s : m.sym_names) out << " " << s;
  out << "\n";
  out << "calls";
  for (LetterIdx a : m.ab.calls) out << " " << m.ab.names[a];
  out << "\n";
  out << "ints";
  for (LetterIdx a : m.ab.ints) out << " " << m.ab.names[a];
  out << "\n";
  out << "rets";
  for (LetterIdx a : m.ab.rets) out << " " << m.ab.names[a];
  out << "\n";
  const std::uint32_t n = m.nstates(), ns = m.nsyms();
  for (std::uint32_t c = 0; c < m.ab.ncall(); ++c)
    for (StateIdx q = 0; q < n; ++q)
      out << "c " << q << " " << m.ab.names[m.ab.calls[c]] << " -> " << m.call_next(q, c)
          << " push " << m.sym_names[m.call_sym(q, c)] << "\n";
  for (std::uint32_t i = 0; i < m.ab.nint(); ++i)
    for (StateIdx q = 0; q < n; ++q)
      out << "i " << q << " " << m.ab.names[m.ab.ints[i]] << " -> " << m.int_next(q, i) << "\n";
  for (std::uint32_t r = 0; r < m.ab.nret(); ++r) {
    for (SymIdx g = 1; g < ns; ++g)
      for (StateIdx q = 0; q < n; ++q)
        out << "r " << q << " " << m.ab.names[m.ab.rets[r]] << " " << m.sym_names[g] << " -> "
            << m.ret_next(q, r, g) << "\n";
    for (StateIdx q = 0; q < n; ++q)
      out << "r " << q << " " << m.ab.names[m.ab.rets[r]] << " " << m.sym_names[kBottom] << " -> "
          << m.ret_next(q, r, kBottom) << "\n";
  }
  if (m.initial) out << "initial " << *m.initial << "\n";
  if (!m.finals.empty()) {
    out << "finals";
    for (StateIdx f : m.finals) out << " " << f;
    out << "\n";
  }
  return out.str();
}

std::string serialize(const Dfa& d) {
  std::ostringstream out;
  out << "dfa\n";
  out << "states " << d.nstates() << "\n";
  out << "letters";
  for (const auto& nm : d.letter_names) out << " " << nm;
  out << "\n";
  for (std::uint32_t a = 0; a < d.nletters(); ++a)
    for (StateIdx q = 0; q < d.nstates(); ++q)
      out << "t " << q << " " << d.letter_names[a] << " -> " << d.next(q, a) << "\n";
  if (!d.subset.empty()) {
    out << "subset";
    for (StateIdx s : d.subset) out << " " << s;
    out << "\n";
  }
  return out.str();
}

std::string serialize(const Vst& t) {
  std::ostringstream out;
  out << "vst\n";
  out << "states " << t.nstates() << "\n";
  out << "in";
  for (const auto& nm : t.in_names) out << " " << nm;
  out << "\n";
  out << "out";
  for (const auto& nm : t.out_names) out << " " << nm;
  out << "\n";
  for (std::uint32_t a = 0; a < t.nin(); ++a)
    for (StateIdx q = 0; q < t.nstates(); ++q) {
      out << "t " << q << " " << t.in_names[a] << " -> " << t.next(q, a) << " emit ";
      const auto& w = t.out(q, a);
      if (w.empty())
        out << "eps";
      else
        for (std::uint32_t s : w) out << t.out_names[s];
      out << "\n";
    }
  return out.str();
}

std::string serialize(const ParsedObject& obj) {
  return std::visit([](const auto& x) { return serialize(x); }, obj);
}

Word word_from_names(const PartitionedAlphabet& ab, const std::string& text) {
  Word w;
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    std::uint32_t g = ab.index_of(tok);
    if (g == kNone) throw ArgumentError("unknown letter '" + tok + "' in word");
    w.push_back(g);
  }
  return w;
}

std::vector<std::string> word_to_names(const PartitionedAlphabet& ab, const Word& w) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (LetterIdx a : w) {
    if (a >= ab.names.size()) throw ArgumentError("letter index out of range in word");
    out.push_back(ab.names[a]);
  }
  return out;
}

}  // namespace visync
