#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "efae/types.hpp"

namespace efae {

struct IlpTerm {
  int var;
  Value coeff;
};

// Linear constraint over integer variables: terms >= rhs, or terms == rhs.
struct IlpConstraint {
  std::vector<IlpTerm> terms;
  Value rhs = 0;
  bool equality = false;
  std::string label;
};

struct IlpModel {
  std::vector<std::string> var_names;
  std::vector<Value> lower;
  std::vector<Value> upper;
  std::vector<IlpConstraint> constraints;

  int num_vars() const { return static_cast<int>(var_names.size()); }
  int add_var(std::string name, Value lo, Value hi);
  void add_constraint(IlpConstraint c);
};

enum class IlpStatus { Feasible, Infeasible, ResourceLimit };

struct IlpResult {
  IlpStatus status = IlpStatus::Infeasible;
  std::vector<Value> assignment;  // valid when Feasible
  std::uint64_t nodes = 0;
};

struct IlpLimits {
  std::uint64_t node_budget = 50'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Depth-first search over variables in declaration order, values ascending,
// pruning with running optimistic/pessimistic bounds per constraint. Finds
// the lexicographically least feasible point.
IlpResult solve_ilp(const IlpModel& model, const IlpLimits& limits = {});

// One constraint per line, plus bounds; stable output for inspection.
std::string to_lp_text(const IlpModel& model);

}  // namespace efae
