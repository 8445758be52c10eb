#include "efae/dp_recipients.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "efae/checks.hpp"

namespace efae {
namespace {

struct VecHash {
  size_t operator()(const std::vector<Value>& v) const {
    size_t h = 1469598103934665603ull;
    for (Value x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct Layer {
  std::vector<std::vector<Value>> states;
  std::vector<std::pair<int, int>> pred;  // (state index in previous layer, recipient slot)
  std::unordered_map<std::vector<Value>, int, VecHash> index;
};

bool next_combination(std::vector<int>& comb, int n) {
  const int p = static_cast<int>(comb.size());
  int i = p - 1;
  while (i >= 0 && comb[i] == n - p + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < p; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

class DpRun {
 public:
  DpRun(const Instance& inst, const DpOptions& opts)
      : inst_(inst), opts_(opts), n_(inst.n()), tp_(compute_types(inst)) {
    opens_ = inst.open_items();
    if (opts_.item_order) {
      auto check = *opts_.item_order;
      std::sort(check.begin(), check.end());
      if (check != opens_)
        throw Error(ErrorCode::BadParams, "item_order is not a permutation of the open items");
      opens_ = *opts_.item_order;
    }
    gamma_value_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      gamma_value_[i].assign(n_, 0);
      for (int a = 0; a < inst.m(); ++a)
        if (inst.owner_of[a] != Instance::kOpen)
          gamma_value_[i][inst.owner_of[a]] += inst.value(i, a);
    }
  }

  // Solves for one recipient set; true means witness found. max_layer tracks
  // the largest table kept after any item prefix (the reported statistic);
  // states_used accumulates across layers and runs (the budgeted quantity).
  bool solve_for(const std::vector<int>& recipients, std::uint64_t& states_used,
                 std::uint64_t& max_layer, std::uint64_t& nodes, bool& limit_hit,
                 std::vector<int>& out_owner) {
    const int p = static_cast<int>(recipients.size());
    const int nt = tp_.agent_type_count();
    std::vector<char> is_recipient(n_, 0);
    for (int i : recipients) is_recipient[i] = 1;

    // A non-recipient's bundle never changes, so any envy it holds under the
    // base assignment is permanent.
    for (int a = 0; a < n_; ++a) {
      if (is_recipient[a]) continue;
      for (int j = 0; j < n_; ++j)
        if (j != a && gamma_value_[a][a] < gamma_value_[a][j]) return false;
    }

    const int k = static_cast<int>(opens_.size());
    std::vector<Layer> layers(k + 1);
    std::vector<Value> base(static_cast<size_t>(p) * nt);
    for (int ri = 0; ri < p; ++ri)
      for (int z = 0; z < nt; ++z) {
        const int rep = tp_.agent_type_members[z][0];
        base[ri * nt + z] = gamma_value_[rep][recipients[ri]];
      }
    layers[0].states.push_back(base);
    layers[0].pred.emplace_back(-1, -1);
    layers[0].index.emplace(std::move(base), 0);
    ++states_used;
    max_layer = std::max<std::uint64_t>(max_layer, 1);

    for (int t = 0; t < k; ++t) {
      const int item = opens_[t];
      Layer& cur = layers[t];
      Layer& next = layers[t + 1];
      for (int s = 0; s < static_cast<int>(cur.states.size()); ++s) {
        for (int ri = 0; ri < p; ++ri) {
          ++nodes;
          if (nodes > opts_.node_budget) {
            limit_hit = true;
            return false;
          }
          std::vector<Value> ns = cur.states[s];
          for (int z = 0; z < nt; ++z)
            ns[ri * nt + z] += inst_.value(tp_.agent_type_members[z][0], item);
          auto [it, fresh] = next.index.try_emplace(ns, static_cast<int>(next.states.size()));
          if (fresh) {
            next.states.push_back(std::move(ns));
            next.pred.emplace_back(s, ri);
            if (++states_used > opts_.state_budget) {
              limit_hit = true;
              return false;
            }
          } else if (opts_.prefer_last_backpointer) {
            next.pred[it->second] = {s, ri};
          }
        }
      }
      max_layer = std::max<std::uint64_t>(max_layer, next.states.size());
      if (opts_.deadline && std::chrono::steady_clock::now() > *opts_.deadline) {
        limit_hit = true;
        return false;
      }
    }

    // Acceptance thresholds that do not depend on the state.
    std::vector<Value> outside_max(p, 0);  // best non-recipient bundle, per recipient's eyes
    for (int ri = 0; ri < p; ++ri)
      for (int j = 0; j < n_; ++j)
        if (!is_recipient[j])
          outside_max[ri] = std::max(outside_max[ri], gamma_value_[recipients[ri]][j]);
    constexpr Value kInf = std::numeric_limits<Value>::max();
    std::vector<Value> min_own(nt, kInf);  // weakest non-recipient of each type
    for (int a = 0; a < n_; ++a)
      if (!is_recipient[a])
        min_own[tp_.agent_type_of[a]] =
            std::min(min_own[tp_.agent_type_of[a]], gamma_value_[a][a]);

    const Layer& last = layers[k];
    for (int s = 0; s < static_cast<int>(last.states.size()); ++s) {
      const std::vector<Value>& st = last.states[s];
      bool ok = true;
      for (int ri = 0; ri < p && ok; ++ri) {
        const int zi = tp_.agent_type_of[recipients[ri]];
        const Value own = st[ri * nt + zi];
        if (own < outside_max[ri]) ok = false;
        for (int rj = 0; rj < p && ok; ++rj)
          if (rj != ri && own < st[rj * nt + zi]) ok = false;
      }
      for (int z = 0; z < nt && ok; ++z) {
        if (min_own[z] == kInf) continue;
        for (int rj = 0; rj < p && ok; ++rj)
          if (min_own[z] < st[rj * nt + z]) ok = false;
      }
      if (!ok) continue;

      out_owner = inst_.owner_of;
      int cursor = s;
      for (int t = k; t > 0; --t) {
        const auto [prev, ri] = layers[t].pred[cursor];
        out_owner[opens_[t - 1]] = recipients[ri];
        cursor = prev;
      }
      return true;
    }
    return false;
  }

  const std::vector<int>& opens() const { return opens_; }

 private:
  const Instance& inst_;
  const DpOptions& opts_;
  int n_;
  TypePartition tp_;
  std::vector<int> opens_;
  std::vector<std::vector<Value>> gamma_value_;  // evaluator x bundle owner
};

}  // namespace

SolveOutcome solve_dp_p_nt(const Instance& inst, const DpOptions& opts) {
  if (inst.query.variant == Query::Variant::Efae)
    throw Error(ErrorCode::WrongVariant, "table solver handles REFAE and FEFAE only");

  Value total = 0;
  for (int a = 0; a < inst.m(); ++a) {
    Value top = 0;
    for (int i = 0; i < inst.n(); ++i) top = std::max(top, inst.value(i, a));
    total = checked_add(total, top);
  }
  if (total > opts.total_value_guard)
    throw Error(ErrorCode::ValuesTooLarge, "summed item maxima exceed the table guard");

  const auto started = std::chrono::steady_clock::now();
  DpRun run(inst, opts);
  SolveOutcome out;
  std::uint64_t states_used = 0, max_layer = 0, nodes = 0;
  bool limit_hit = false;
  std::vector<int> owner;
  bool found = false;

  if (inst.query.variant == Query::Variant::Refae) {
    found = run.solve_for(inst.query.recipients, states_used, max_layer, nodes, limit_hit,
                          owner);
  } else {
    std::vector<int> comb(inst.query.p);
    for (int i = 0; i < inst.query.p; ++i) comb[i] = i;
    do {
      found = run.solve_for(comb, states_used, max_layer, nodes, limit_hit, owner);
    } while (!found && !limit_hit && next_combination(comb, inst.n()));
  }

  out.stats.nodes = nodes;
  out.stats.states = max_layer;
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
