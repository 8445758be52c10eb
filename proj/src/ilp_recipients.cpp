#include "efae/ilp_recipients.hpp"

#include <algorithm>
#include <map>

#include "efae/checks.hpp"

namespace efae {
namespace {

struct OpenTypes {
  std::vector<std::vector<int>> members;  // per type, open items ascending
  std::vector<std::vector<Value>> value;  // value[agent][type]
};

OpenTypes open_item_types(const Instance& inst) {
  OpenTypes ot;
  std::map<std::vector<Value>, int> seen;
  std::vector<Value> col(inst.n());
  for (int a : inst.open_items()) {
    for (int i = 0; i < inst.n(); ++i) col[i] = inst.value(i, a);
    auto [it, fresh] = seen.try_emplace(col, static_cast<int>(ot.members.size()));
    if (fresh) ot.members.emplace_back();
    ot.members[it->second].push_back(a);
  }
  ot.value.assign(inst.n(), std::vector<Value>(ot.members.size(), 0));
  for (size_t t = 0; t < ot.members.size(); ++t)
    for (int i = 0; i < inst.n(); ++i) ot.value[i][t] = inst.value(i, ot.members[t][0]);
  return ot;
}

std::vector<std::vector<Value>> gamma_values(const Instance& inst) {
  std::vector<std::vector<Value>> g(inst.n(), std::vector<Value>(inst.n(), 0));
  for (int a = 0; a < inst.m(); ++a)
    if (inst.owner_of[a] != Instance::kOpen)
      for (int i = 0; i < inst.n(); ++i) g[i][inst.owner_of[a]] += inst.value(i, a);
  return g;
}

bool next_combination(std::vector<int>& comb, int n) {
  const int p = static_cast<int>(comb.size());
  int i = p - 1;
  while (i >= 0 && comb[i] == n - p + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < p; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

// Runs one recipient set to a definite answer unless the node budget ends it.
bool solve_for(const Instance& inst, const std::vector<int>& recipients,
               const IlpRecipientOptions& opts, std::uint64_t& nodes, bool& limit_hit,
               std::vector<int>& out_owner) {
  const auto g = gamma_values(inst);
  std::vector<char> is_recipient(inst.n(), 0);
  for (int i : recipients) is_recipient[i] = 1;
  for (int a = 0; a < inst.n(); ++a) {
    if (is_recipient[a]) continue;
    for (int b = 0; b < inst.n(); ++b)
      if (b != a && !is_recipient[b] && g[a][a] < g[a][b]) return false;
  }

  IlpModel model = build_ilp(inst, recipients, opts.guard_recipient_vs_outside);
  IlpLimits limits = opts.limits;
  if (limits.node_budget > nodes)
    limits.node_budget -= nodes;
  else
    limits.node_budget = 0;
  IlpResult res = solve_ilp(model, limits);
  nodes += res.nodes;
  if (res.status == IlpStatus::ResourceLimit) {
    limit_hit = true;
    return false;
  }
  if (res.status == IlpStatus::Infeasible) return false;

  const OpenTypes ot = open_item_types(inst);
  const int p = static_cast<int>(recipients.size());
  out_owner = inst.owner_of;
  for (size_t t = 0; t < ot.members.size(); ++t) {
    size_t cursor = 0;
    for (int ri = 0; ri < p; ++ri) {
      const Value take = res.assignment[t * p + ri];
      for (Value c = 0; c < take; ++c) out_owner[ot.members[t][cursor++]] = recipients[ri];
    }
  }
  return true;
}

}  // namespace

IlpModel build_ilp(const Instance& inst, const std::vector<int>& recipients,
                   bool guard_recipient_vs_outside) {
  const OpenTypes ot = open_item_types(inst);
  const auto g = gamma_values(inst);
  const int p = static_cast<int>(recipients.size());
  const int nt = static_cast<int>(ot.members.size());

  IlpModel model;
  // Type-major declaration keeps each supply equality over consecutive
  // variables, which lets the search bind them early.
  for (int t = 0; t < nt; ++t)
    for (int ri = 0; ri < p; ++ri)
      model.add_var("x_a" + std::to_string(recipients[ri]) + "_t" + std::to_string(t), 0,
                    static_cast<Value>(ot.members[t].size()));
  auto var = [&](int t, int ri) { return t * p + ri; };

  for (int t = 0; t < nt; ++t) {
    IlpConstraint c;
    c.equality = true;
    c.rhs = static_cast<Value>(ot.members[t].size());
    c.label = "supply_t" + std::to_string(t);
    for (int ri = 0; ri < p; ++ri) c.terms.push_back({var(t, ri), 1});
    model.add_constraint(std::move(c));
  }

  for (int ri = 0; ri < p; ++ri)
    for (int rj = 0; rj < p; ++rj) {
      if (ri == rj) continue;
      const int i = recipients[ri];
      IlpConstraint c;
      c.label = "ef_r" + std::to_string(ri) + "_r" + std::to_string(rj);
      c.rhs = g[i][recipients[rj]] - g[i][i];
      for (int t = 0; t < nt; ++t) {
        const Value w = ot.value[i][t];
        if (w == 0) continue;
        c.terms.push_back({var(t, ri), w});
        c.terms.push_back({var(t, rj), -w});
      }
      model.add_constraint(std::move(c));
    }

  std::vector<char> is_recipient(inst.n(), 0);
  for (int i : recipients) is_recipient[i] = 1;
  for (int j = 0; j < inst.n(); ++j) {
    if (is_recipient[j]) continue;
    for (int ri = 0; ri < p; ++ri) {
      const int i = recipients[ri];
      // g_j(j) >= g_j(i) + v_j(pi_i), written as -v_j(pi_i) >= g_j(i) - g_j(j).
      IlpConstraint c;
      c.label = "ef_out" + std::to_string(j) + "_r" + std::to_string(ri);
      c.rhs = g[j][i] - g[j][j];
      for (int t = 0; t < nt; ++t) {
        const Value w = ot.value[j][t];
        if (w == 0) continue;
        c.terms.push_back({var(t, ri), -w});
      }
      model.add_constraint(std::move(c));
    }
  }

  if (guard_recipient_vs_outside) {
    for (int ri = 0; ri < p; ++ri) {
      const int i = recipients[ri];
      for (int j = 0; j < inst.n(); ++j) {
        if (is_recipient[j]) continue;
        IlpConstraint c;
        c.label = "ef_r" + std::to_string(ri) + "_out" + std::to_string(j);
        c.rhs = g[i][j] - g[i][i];
        for (int t = 0; t < nt; ++t) {
          const Value w = ot.value[i][t];
          if (w == 0) continue;
          c.terms.push_back({var(t, ri), w});
        }
        model.add_constraint(std::move(c));
      }
    }
  }
  return model;
}

SolveOutcome solve_refae_ilp(const Instance& inst, const IlpRecipientOptions& opts) {
  if (inst.query.variant != Query::Variant::Refae)
    throw Error(ErrorCode::WrongVariant, "count-model driver expects a REFAE query");
  const auto started = std::chrono::steady_clock::now();
  SolveOutcome out;
  std::uint64_t nodes = 0;
  bool limit_hit = false;
  std::vector<int> owner;
  const bool found = solve_for(inst, inst.query.recipients, opts, nodes, limit_hit, owner);
  out.stats.nodes = nodes;
  out.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();
  if (found) {
    out.answer = Answer::Yes;
    out.witness = Allocation{std::move(owner)};
  } else {
    out.answer = limit_hit ? Answer::ResourceLimit : Answer::No;
  }
  return out;
}

SolveOutcome solve_fefae_ilp(const Instance& inst, const IlpRecipientOptions& opts) {
  if (inst.query.variant != Query::Variant::Fefae)
    throw Error(ErrorCode::WrongVariant, "count-model driver expects a FEFAE query");
  const auto started = std::chrono::steady_clock::now();
  SolveOutcome out;
  std::uint64_t nodes = 0;
  bool limit_hit = false;
  std::vector<int> owner;
  bool found = false;
  std::vector<int> comb(inst.query.p);
  for (int i = 0; i < inst.query.p; ++i) comb[i] = i;
  do {
    found = solve_for(inst, comb, opts, nodes, limit_hit, owner);
  } while (!found && !limit_hit && next_combination(comb, inst.n()));
  out.stats.nodes = nodes;
  out.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();
  if (found) {
    out.answer = Answer::Yes;
    out.witness = Allocation{std::move(owner)};
  } else {
    out.answer = limit_hit ? Answer::ResourceLimit : Answer::No;
  }
  return out;
}

}  // namespace efae
