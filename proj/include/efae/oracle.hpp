#pragma once

#include <chrono>
#include <optional>

#include "efae/types.hpp"

namespace efae {

enum class Notion { Ef, Ef1, Efx };

const char* to_string(Notion notion);
std::optional<Notion> parse_notion(const std::string& text);

struct OracleOptions {
  std::uint64_t leaf_budget = 10'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Exhaustive reference solver. Enumerates every placement of the open items
// over the admissible recipients (all agents for EFAE, the restricted set for
// REFAE, every size-p agent subset in rank order for FEFAE) and returns the
// first envy-free completion in enumeration order, if any. No pruning by
// design: this is the ground truth the other engines are compared against.
SolveOutcome solve_bruteforce(const Instance& inst, const OracleOptions& opts = {});

// Same enumeration, but the acceptance predicate is the chosen fairness
// notion instead of exact envy-freeness.
SolveOutcome solve_bruteforce_relaxed(const Instance& inst, Notion notion,
                                      const OracleOptions& opts = {});

}  // namespace efae
