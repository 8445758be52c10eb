#pragma once

#include <chrono>
#include <functional>
#include <optional>

#include "efae/types.hpp"

namespace efae {

struct FptOptions {
  std::uint64_t node_budget = 200'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // When set, unfinalized envious agents are matched against remaining
  // bundles (Hall-style necessity test) instead of checked one by one.
  bool hall_prune = true;
};

// Branching solver for EFAE parameterized by open-item count and agent-type
// count. Phase 1 eliminates envy by granting open items to the least envious
// agent; the remaining items are then partitioned, partition bundles are
// guessed onto agents of small types, and leftover bundles are matched onto
// large-type agents.
SolveOutcome solve_fpt_k_nt(const Instance& inst, const FptOptions& opts = {});

// Finds an assignment of every left node to a distinct right node along
// admissible edges (Kuhn's augmenting paths, deterministic scan order).
// Returns, per left node, the chosen element of right_nodes.
std::optional<std::vector<int>> saturating_matching(
    int num_left, const std::vector<int>& right_nodes,
    const std::function<bool(int, int)>& edge);

// Loose worst-case bound on the number of search nodes, used by the test
// instrumentation.
long double fpt_branch_bound(int k, int n, int n_t);

}  // namespace efae
