// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace visync {

/// FNV-1a over a span of 32-bit values; good enough for interning tables.
inline std::size_t hash_u32_span(const std::uint32_t* data, std::size_t n) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= data[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

struct VecU32Hash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    return hash_u32_span(v.data(), v.size());
  }
};

struct PairU32Hash {
  std::size_t operator()(const std::pair<std::uint32_t, std::uint32_t>& p) const {
    std::uint64_t x = (static_cast<std::uint64_t>(p.first) << 32) | p.second;
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdull;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

/// Interner from vectors of u32 to dense ids. Used by product constructions
/// whose state spaces are discovered lazily.
class VecInterner {
 public:
  std::uint32_t intern(const std::vector<std::uint32_t>& key) {
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(keys_.size());
    ids_.emplace(key, id);
    keys_.push_back(key);
    return id;
  }

  /// Returns the id if present, otherwise UINT32_MAX.
  std::uint32_t find(const std::vector<std::uint32_t>& key) const {
    auto it = ids_.find(key);
    return it == ids_.end() ? UINT32_MAX : it->second;
  }

  const std::vector<std::uint32_t>& key(std::uint32_t id) const { return keys_[id]; }
  std::size_t size() const { return keys_.size(); }

 private:
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VecU32Hash> ids_;
  std::vector<std::vector<std::uint32_t>> keys_;
};

/// Joins tokens with single spaces.
inline std::string join(const std::vector<std::string>& parts, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace visync
