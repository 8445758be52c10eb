#include "efae/ilp.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace efae {

int IlpModel::add_var(std::string name, Value lo, Value hi) {
  var_names.push_back(std::move(name));
  lower.push_back(lo);
  upper.push_back(hi);
  return num_vars() - 1;
}

void IlpModel::add_constraint(IlpConstraint c) { constraints.push_back(std::move(c)); }

namespace {

struct ConstraintState {
  Value partial = 0;   // contribution of assigned variables
  Value min_rest = 0;  // least possible contribution of the unassigned ones
  Value max_rest = 0;
};

bool window_ok(const IlpConstraint& c, const ConstraintState& s) {
  if (c.equality)
    return s.partial + s.min_rest <= c.rhs && c.rhs <= s.partial + s.max_rest;
  return s.partial + s.max_rest >= c.rhs;
}

}  // namespace

IlpResult solve_ilp(const IlpModel& model, const IlpLimits& limits) {
  const int nv = model.num_vars();
  IlpResult result;

  for (int v = 0; v < nv; ++v)
    if (model.lower[v] > model.upper[v]) {
      result.status = IlpStatus::Infeasible;
      return result;
    }

  std::vector<std::vector<IlpTerm>> touching(nv);  // var -> (constraint, coeff)
  std::vector<ConstraintState> state(model.constraints.size());
  for (int c = 0; c < static_cast<int>(model.constraints.size()); ++c) {
    for (const IlpTerm& t : model.constraints[c].terms) {
      touching[t.var].push_back({c, t.coeff});
      const Value lo = checked_mul(t.coeff, model.lower[t.var]);
      const Value hi = checked_mul(t.coeff, model.upper[t.var]);
      state[c].min_rest = checked_add(state[c].min_rest, std::min(lo, hi));
      state[c].max_rest = checked_add(state[c].max_rest, std::max(lo, hi));
    }
  }
  for (size_t c = 0; c < model.constraints.size(); ++c)
    if (!window_ok(model.constraints[c], state[c])) return result;

  std::vector<Value> x(nv);
  bool limit_hit = false;

  // Applies x[v] = value; returns false if some touched constraint's window
  // closes. rollback() must mirror it exactly.
  auto apply = [&](int v, Value value, bool& feasible) {
    feasible = true;
    for (const IlpTerm& t : touching[v]) {
      ConstraintState& s = state[t.var];
      const Value lo = t.coeff * model.lower[v];
      const Value hi = t.coeff * model.upper[v];
      s.partial += t.coeff * value;
      s.min_rest -= std::min(lo, hi);
      s.max_rest -= std::max(lo, hi);
    }
    for (const IlpTerm& t : touching[v])
      if (!window_ok(model.constraints[t.var], state[t.var])) {
        feasible = false;
        break;
      }
  };
  auto rollback = [&](int v, Value value) {
    for (const IlpTerm& t : touching[v]) {
      ConstraintState& s = state[t.var];
      const Value lo = t.coeff * model.lower[v];
      const Value hi = t.coeff * model.upper[v];
      s.partial -= t.coeff * value;
      s.min_rest += std::min(lo, hi);
      s.max_rest += std::max(lo, hi);
    }
  };

  std::function<bool(int)> dfs = [&](int v) -> bool {
    if (v == nv) return true;
    for (Value value = model.lower[v]; value <= model.upper[v]; ++value) {
      if (++result.nodes > limits.node_budget) {
        limit_hit = true;
        return false;
      }
      if ((result.nodes & 0xfff) == 0 && limits.deadline &&
          std::chrono::steady_clock::now() > *limits.deadline) {
        limit_hit = true;
        return false;
      }
      bool feasible = false;
      apply(v, value, feasible);
      if (feasible) {
        x[v] = value;
        if (dfs(v + 1)) return true;
      }
      rollback(v, value);
      if (limit_hit) return false;
    }
    return false;
  };

  if (dfs(0)) {
    result.status = IlpStatus::Feasible;
    result.assignment = x;
  } else {
    result.status = limit_hit ? IlpStatus::ResourceLimit : IlpStatus::Infeasible;
  }
  return result;
}

std::string to_lp_text(const IlpModel& model) {
  std::ostringstream out;
  out << "subject to\n";
  for (const IlpConstraint& c : model.constraints) {
    out << c.label << ":";
    if (c.terms.empty()) {
      out << " 0";
    } else {
      bool first = true;
      for (const IlpTerm& t : c.terms) {
        if (t.coeff >= 0 && !first)
          out << " +";
        else if (t.coeff < 0)
          out << " -";
        else
          out << " ";
        out << (t.coeff < 0 ? -t.coeff : t.coeff) << " " << model.var_names[t.var];
        first = false;
      }
    }
    out << (c.equality ? " = " : " >= ") << c.rhs << "\n";
  }
  out << "bounds\n";
  for (int v = 0; v < model.num_vars(); ++v)
    out << model.lower[v] << " <= " << model.var_names[v] << " <= " << model.upper[v] << "\n";
  out << "end\n";
  return out.str();
}

}  // namespace efae
