// Copyright (c) 2026 The visync authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>

#include "semantics.hpp"

namespace visync {

enum class OracleOutcome : int {
  Found = 0,          // a synchronizing word within the length limit exists
  NoneWithin = 1,     // exhaustive search up to the limit found none
  BudgetExceeded = 2  // the configuration budget ran out before either
};

struct OracleResult {
  OracleOutcome outcome = OracleOutcome::NoneWithin;
  Word word;                    // set when outcome == Found
  std::uint64_t explored = 0;   // number of configurations created
};

inline constexpr std::uint32_t kDefaultOracleLimit = 12;
inline constexpr std::uint64_t kDefaultOracleBudget = 5'000'000;

/// Breadth-first search over tuples of configurations (one per state), in
/// ascending letter order, so a Found result carries the lexicographically
/// least among the shortest synchronizing words. Tracks sign alternations of
/// stack-height changes to honor `turn_bound`. Independent of the decision
/// procedures: shares no reachability or summary machinery with them.
OracleResult oracle_search(const Dvpda& m, SyncModel model,
                           std::optional<std::uint32_t> turn_bound,
                           std::uint32_t limit = kDefaultOracleLimit,
                           std::uint64_t budget = kDefaultOracleBudget);

}  // namespace visync
