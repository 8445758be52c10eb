#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "efae/types.hpp"

namespace efae {

struct DpOptions {
  // Total number of distinct table states kept across all layers.
  std::uint64_t state_budget = 2'000'000;
  std::uint64_t node_budget = 500'000'000;
  // The table indexes bundles by exact values, so magnitudes must stay small;
  // instances whose summed per-item maxima exceed this are refused.
  Value total_value_guard = 100'000;
  // Tie-breaking knob for duplicate states, used to show witness stability.
  bool prefer_last_backpointer = false;
  // Override of the open-item processing order (test hook; must be a
  // permutation of the open items).
  std::optional<std::vector<int>> item_order;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Table-based solver for REFAE and FEFAE parameterized by recipient count
// and agent-type count. A state records, for every recipient and every agent
// type, the value that type places on the recipient's bundle; open items are
// folded in one at a time. FEFAE iterates over recipient sets of size p in
// rank order.
SolveOutcome solve_dp_p_nt(const Instance& inst, const DpOptions& opts = {});

}  // namespace efae
