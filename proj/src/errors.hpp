// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace visync {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text. `line` is 1-based and refers to the parsed buffer.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An exploration or solver cap was exhausted before an answer was reached.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& msg, std::uint64_t spent = 0)
      : Error(msg), spent_(spent) {}
  std::uint64_t spent() const { return spent_; }

 private:
  std::uint64_t spent_;
};

/// A caller-supplied value was unusable (unknown letter, wrong object kind,
/// missing declaration, bad enum value).
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& msg) : Error(msg) {}
};

/// A generator could not pick a fresh letter name because the input automaton
/// already uses it.
class NameCollisionError : public ArgumentError {
 public:
  explicit NameCollisionError(const std::string& msg) : ArgumentError(msg) {}
};

}  // namespace visync
