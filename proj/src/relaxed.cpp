#include "efae/relaxed.hpp"

#include <algorithm>

#include "efae/checks.hpp"
#include "efae/oracle.hpp"

namespace efae {
namespace {

std::vector<int> round_robin(const Instance& inst) {
  std::vector<int> owner = inst.owner_of;
  std::vector<int> opens = inst.open_items();
  int turn = 0;
  while (!opens.empty()) {
    const int agent = turn % inst.n();
    size_t best = 0;
    for (size_t c = 1; c < opens.size(); ++c)
      if (inst.value(agent, opens[c]) > inst.value(agent, opens[best])) best = c;
    owner[opens[best]] = agent;
    opens.erase(opens.begin() + best);
    ++turn;
  }
  return owner;
}

std::vector<int> envy_cycle(const Instance& inst) {
  const int n = inst.n();
  std::vector<int> owner = inst.owner_of;  // final result, fixed part included
  std::vector<std::vector<Value>> pi_val(n, std::vector<Value>(n, 0));  // open part only

  auto envies = [&](int i, int j) { return pi_val[i][i] < pi_val[i][j]; };
  auto unenvied_agent = [&]() {
    for (int i = 0; i < n; ++i) {
      bool envied = false;
      for (int j = 0; j < n && !envied; ++j) envied = j != i && envies(j, i);
      if (!envied) return i;
    }
    return -1;
  };

  for (int item : inst.open_items()) {
    int receiver = unenvied_agent();
    while (receiver < 0) {
      // Everyone is envied, so the envy digraph has a cycle; walk enviers
      // from agent 0 until a repeat, then rotate bundles along the cycle.
      std::vector<int> walk{0};
      std::vector<char> seen(n, 0);
      seen[0] = 1;
      while (true) {
        int cur = walk.back();
        int envier = -1;
        for (int u = 0; u < n && envier < 0; ++u)
          if (u != cur && envies(u, cur)) envier = u;
        if (seen[envier]) {
          walk.push_back(envier);
          break;
        }
        seen[envier] = 1;
        walk.push_back(envier);
      }
      const int start =
          static_cast<int>(std::find(walk.begin(), walk.end(), walk.back()) - walk.begin());
      // walk[start..end-1] is a cycle where each member envies the previous
      // one; give each member the open-part bundle of the agent it envies.
      std::vector<int> cycle(walk.begin() + start, walk.end() - 1);
      std::vector<int> new_owner = owner;
      for (size_t t = 0; t < cycle.size(); ++t) {
        const int getter = cycle[(t + 1) % cycle.size()];
        const int loser = cycle[t];
        for (int a = 0; a < inst.m(); ++a)
          if (inst.owner_of[a] == Instance::kOpen && owner[a] == loser) new_owner[a] = getter;
      }
      owner = std::move(new_owner);
      for (int i = 0; i < n; ++i) {
        std::fill(pi_val[i].begin(), pi_val[i].end(), 0);
        for (int a = 0; a < inst.m(); ++a)
          if (inst.owner_of[a] == Instance::kOpen && owner[a] != Instance::kOpen)
            pi_val[i][owner[a]] += inst.value(i, a);
      }
      receiver = unenvied_agent();
    }
    owner[item] = receiver;
    for (int i = 0; i < n; ++i) pi_val[i][receiver] += inst.value(i, item);
  }
  return owner;
}

Instance make_instance(std::vector<std::string> agents, std::vector<std::string> items,
                       std::vector<std::vector<Value>> vals, std::vector<int> owner) {
  Instance inst;
  inst.agent_ids = std::move(agents);
  inst.item_ids = std::move(items);
  inst.valuations = std::move(vals);
  inst.owner_of = std::move(owner);
  inst.query = Query::efae();
  return validate_instance(std::move(inst));
}

}  // namespace

Allocation extend_to_ef1(const Instance& inst, Ef1Engine engine) {
  if (!is_envy_free(inst, inst.owner_of))
    throw Error(ErrorCode::GammaNotEf, "fixed part of the allocation is not envy-free");
  std::vector<int> owner =
      engine == Ef1Engine::RoundRobin ? round_robin(inst) : envy_cycle(inst);
  if (!is_ef1(inst, owner))
    throw Error(ErrorCode::InternalInvariantViolation, "completion failed the EF1 check");
  return Allocation{std::move(owner)};
}

const std::vector<CatalogEntry>& counterexample_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> out;
    out.push_back({"EFX_BLOCK_2AGENT",
                   make_instance({"a1", "a2"}, {"g1", "g2", "o1"},
                                 {{1, 1, 2}, {1, 1, 2}}, {0, 1, Instance::kOpen})});
    out.push_back({"EFX_BLOCK_349",
                   make_instance({"a1", "a2"}, {"g1", "g2", "o1", "o2", "o3"},
                                 {{1, 1, 3, 4, 9}, {1, 1, 3, 4, 9}},
                                 {0, 1, Instance::kOpen, Instance::kOpen, Instance::kOpen})});
    out.push_back({"EF1_BLOCK_FROM_EFX",
                   make_instance({"a1", "a2"}, {"x", "y", "z"},
                                 {{10, 0, 1}, {0, 10, 1}}, {1, 0, Instance::kOpen})});
    return out;
  }();
  return catalog;
}

std::vector<CatalogCheck> verify_catalog() {
  std::vector<CatalogCheck> checks;
  auto get = [](const std::string& name) -> const Instance& {
    for (const CatalogEntry& e : counterexample_catalog())
      if (e.name == name) return e.instance;
    throw Error(ErrorCode::InternalInvariantViolation, "unknown catalog entry");
  };

  for (const char* name : {"EFX_BLOCK_2AGENT", "EFX_BLOCK_349"}) {
    const Instance& inst = get(name);
    checks.push_back({std::string(name) + ".base_is_ef", is_envy_free(inst, inst.owner_of)});
    checks.push_back({std::string(name) + ".no_efx_completion",
                      solve_bruteforce_relaxed(inst, Notion::Efx).answer == Answer::No});
    checks.push_back({std::string(name) + ".ef1_completion_exists",
                      solve_bruteforce_relaxed(inst, Notion::Ef1).answer == Answer::Yes});
  }
  const Instance& hard = get("EF1_BLOCK_FROM_EFX");
  checks.push_back({"EF1_BLOCK_FROM_EFX.base_is_efx", is_efx(hard, hard.owner_of)});
  checks.push_back({"EF1_BLOCK_FROM_EFX.no_ef1_completion",
                    solve_bruteforce_relaxed(hard, Notion::Ef1).answer == Answer::No});
  return checks;
}

}  // namespace efae
