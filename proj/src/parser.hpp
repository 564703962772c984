// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "automaton.hpp"
#include "transducer.hpp"

namespace visync {

using ParsedObject = std::variant<Dvpda, Dfa, Vst>;

/// Parses one object from text. The first meaningful line selects the format:
/// `dvpda`, `dfa` or `vst`. Throws ParseError on malformed input. The result
/// is structurally well-formed but not necessarily valid; run validate() to
/// collect semantic defects (incomplete tables, bottom pushes, ...).
ParsedObject parse_text(const std::string& text);

std::string serialize(const Dvpda& m);
std::string serialize(const Dfa& d);
std::string serialize(const Vst& t);
std::string serialize(const ParsedObject& obj);

/// Maps whitespace-separated letter names to indices. Throws ArgumentError on
/// an unknown name. An empty (or all-blank) string is the empty word.
Word word_from_names(const PartitionedAlphabet& ab, const std::string& text);
std::vector<std::string> word_to_names(const PartitionedAlphabet& ab, const Word& w);

}  // namespace visync
