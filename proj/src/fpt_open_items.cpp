#include "efae/fpt_open_items.hpp"

#include <algorithm>
#include <cmath>

#include "efae/checks.hpp"
#include "envy_tracker.hpp"

namespace efae {

std::optional<std::vector<int>> saturating_matching(
    int num_left, const std::vector<int>& right_nodes,
    const std::function<bool(int, int)>& edge) {
  const int r = static_cast<int>(right_nodes.size());
  std::vector<int> match_right(r, -1);  // right slot -> left node
  std::vector<char> visited(r);

  std::function<bool(int)> augment = [&](int left) {
    for (int s = 0; s < r; ++s) {
      if (visited[s] || !edge(left, right_nodes[s])) continue;
      visited[s] = 1;
      if (match_right[s] == -1 || augment(match_right[s])) {
        match_right[s] = left;
        return true;
      }
    }
    return false;
  };

  for (int left = 0; left < num_left; ++left) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(left)) return std::nullopt;
  }
  std::vector<int> match_left(num_left, -1);
  for (int s = 0; s < r; ++s)
    if (match_right[s] != -1) match_left[match_right[s]] = right_nodes[s];
  return match_left;
}

long double fpt_branch_bound(int k, int n, int n_t) {
  const long double kk = std::pow(static_cast<long double>(std::max(k, 1)), k);
  const long double targets =
      std::pow(static_cast<long double>(k) * n_t + 1.0L, k);
  const long double grants = std::pow(static_cast<long double>(std::max(k * n, 1)), k);
  return kk * targets * grants;
}

namespace {

constexpr int kLargeTarget = -2;

class FptEngine {
 public:
  FptEngine(const Instance& inst, const FptOptions& opts)
      : inst_(inst), opts_(opts), n_(inst.n()), tracker_(inst) {
    const TypePartition tp = compute_types(inst);
    type_of_ = tp.agent_type_of;
    type_size_.resize(tp.agent_type_count());
    for (int t = 0; t < tp.agent_type_count(); ++t)
      type_size_[t] = static_cast<int>(tp.agent_type_members[t].size());
  }

  SolveOutcome run() {
    const auto started = std::chrono::steady_clock::now();
    remaining_ = inst_.open_items();
    SolveOutcome out;
    const bool found = phase1();
    out.stats.nodes = nodes_;
    out.stats.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    if (found) {
      out.answer = Answer::Yes;
      out.witness = Allocation{std::move(witness_)};
    } else {
      out.answer = limit_hit_ ? Answer::ResourceLimit : Answer::No;
    }
    return out;
  }

 private:
  bool budget_ok() {
    if (limit_hit_) return false;
    if (nodes_ > opts_.node_budget) {
      limit_hit_ = true;
      return false;
    }
    if ((nodes_ & 0xfff) == 0 && opts_.deadline &&
        std::chrono::steady_clock::now() > *opts_.deadline) {
      limit_hit_ = true;
      return false;
    }
    return true;
  }

  // While some agent is envious it must receive at least one more open item;
  // branch over which one goes to the least envious agent.
  bool phase1() {
    if (!budget_ok()) return false;
    const int envier = tracker_.first_envious_agent();
    if (envier < 0) return phase2();
    if (remaining_.empty()) return false;
    for (size_t idx = 0; idx < remaining_.size(); ++idx) {
      const int item = remaining_[idx];
      remaining_.erase(remaining_.begin() + idx);
      tracker_.set_owner(item, envier);
      ++nodes_;
      if (phase1()) return true;
      tracker_.set_open(item);
      remaining_.insert(remaining_.begin() + idx, item);
      if (limit_hit_) return false;
    }
    return false;
  }

  // Envy-free state reached. Classify agents by type size against the number
  // of still-open items, then enumerate how those items are grouped.
  bool phase2() {
    const int kk = static_cast<int>(remaining_.size());
    small_.clear();
    large_agents_.clear();
    for (int i = 0; i < n_; ++i)
      (type_size_[type_of_[i]] <= kk ? small_ : large_agents_).push_back(i);

    if (kk == 0) {
      // Nothing left to place and no envy: done.
      witness_ = tracker_.owner();
      return true;
    }

    // Restricted-growth strings in lexicographic order.
    std::vector<int> rgs(kk, 0);
    while (true) {
      ++nodes_;
      if (!budget_ok()) return false;
      if (try_partition(rgs)) return true;
      if (limit_hit_) return false;
      int pos = kk - 1;
      for (; pos > 0; --pos) {
        int prefix_max = 0;
        for (int i = 0; i < pos; ++i) prefix_max = std::max(prefix_max, rgs[i]);
        if (rgs[pos] <= prefix_max) {
          ++rgs[pos];
          std::fill(rgs.begin() + pos + 1, rgs.end(), 0);
          break;
        }
      }
      if (pos == 0) return false;
    }
  }

  bool try_partition(const std::vector<int>& rgs) {
    const int kk = static_cast<int>(remaining_.size());
    int r = 0;
    for (int label : rgs) r = std::max(r, label + 1);
    bundles_.assign(r, {});
    for (int i = 0; i < kk; ++i) bundles_[rgs[i]].push_back(remaining_[i]);

    bundle_value_.assign(static_cast<size_t>(n_) * r, 0);
    for (int b = 0; b < r; ++b)
      for (int item : bundles_[b])
        for (int i = 0; i < n_; ++i)
          bundle_value_[i * static_cast<size_t>(r) + b] += inst_.value(i, item);

    target_.assign(r, -1);
    granted_.clear();
    return assign_targets(0);
  }

  Value bv(int agent, int bundle) const {
    return bundle_value_[agent * bundles_.size() + bundle];
  }

  bool assign_targets(int b) {
    if (!budget_ok()) return false;
    const int r = static_cast<int>(bundles_.size());
    if (b == r) return finish_profile();

    for (int z : small_) {
      if (std::find(granted_.begin(), granted_.end(), z) != granted_.end()) continue;
      ++nodes_;
      for (int item : bundles_[b]) tracker_.set_owner(item, z);
      target_[b] = z;
      granted_.push_back(z);
      if (grant_checks(b, z) && assign_targets(b + 1)) return true;
      granted_.pop_back();
      target_[b] = -1;
      for (int item : bundles_[b]) tracker_.set_open(item);
      if (limit_hit_) return false;
    }

    ++nodes_;
    target_[b] = kLargeTarget;
    if (deferred_checks(b) && assign_targets(b + 1)) return true;
    target_[b] = -1;
    return false;
  }

  // After granting bundle b to z, z's bundle is final, so any envy by or
  // toward a finalized agent is fatal. Envy of a not-yet-granted small agent
  // may still be cured by a later bundle and is only screened for
  // feasibility.
  bool grant_checks(int b, int z) {
    for (int j = 0; j < n_; ++j)
      if (j != z && tracker_.val(z, z) < tracker_.val(z, j)) return false;
    for (size_t g = 0; g + 1 < granted_.size(); ++g) {
      const int prev = granted_[g];
      if (tracker_.val(prev, prev) < tracker_.val(prev, z)) return false;
    }
    // Large-type agents can only ever gain bundles they value at zero, so
    // their envy toward z cannot be repaired later either.
    for (int i : large_agents_)
      if (tracker_.val(i, i) < tracker_.val(i, z)) return false;
    return deferred_checks(b);
  }

  // Every still-envious ungranted small agent needs one of the bundles that
  // have not been placed yet, with enough value to cancel its current envy
  // level; distinct agents need distinct bundles.
  bool deferred_checks(int placed) {
    const int r = static_cast<int>(bundles_.size());
    std::vector<int> needy;
    std::vector<Value> deficit;  // value still missing to reach the envy level
    for (int u : small_) {
      if (std::find(granted_.begin(), granted_.end(), u) != granted_.end()) continue;
      Value ref = 0;
      for (int j = 0; j < n_; ++j) ref = std::max(ref, tracker_.val(u, j));
      if (tracker_.val(u, u) >= ref) continue;
      needy.push_back(u);
      deficit.push_back(ref - tracker_.val(u, u));
    }
    if (needy.empty()) return true;

    std::vector<int> open_bundles;
    for (int bb = placed + 1; bb < r; ++bb) open_bundles.push_back(bb);
    if (static_cast<int>(needy.size()) > static_cast<int>(open_bundles.size())) return false;

    auto cures = [&](int left, int bundle) { return bv(needy[left], bundle) >= deficit[left]; };
    if (!opts_.hall_prune) {
      for (int left = 0; left < static_cast<int>(needy.size()); ++left) {
        bool any = false;
        for (int bb : open_bundles) any = any || cures(left, bb);
        if (!any) return false;
      }
      return true;
    }
    return saturating_matching(static_cast<int>(needy.size()), open_bundles, cures).has_value();
  }

  bool finish_profile() {
    if (tracker_.envy_count() != 0) return false;
    std::vector<int> large_bundles;
    for (int b = 0; b < static_cast<int>(bundles_.size()); ++b)
      if (target_[b] == kLargeTarget) large_bundles.push_back(b);
    if (large_bundles.empty()) {
      witness_ = tracker_.owner();
      return true;
    }

    // Receivers must value their bundle at zero: an unserved same-type twin
    // keeps exactly its current holding, so a positive-valued grant would
    // make the twin envious. Zero-valued grants keep the receiver's own
    // standing unchanged, which lets the edge tests compose.
    auto edge = [&](int left, int agent) {
      const int b = large_bundles[left];
      if (bv(agent, b) != 0) return false;
      for (int x = 0; x < n_; ++x) {
        if (x == agent) continue;
        if (tracker_.val(x, x) < tracker_.val(x, agent) + bv(x, b)) return false;
      }
      return true;
    };
    auto matched = saturating_matching(static_cast<int>(large_bundles.size()), large_agents_, edge);
    if (!matched) return false;

    witness_ = tracker_.owner();
    for (size_t left = 0; left < large_bundles.size(); ++left)
      for (int item : bundles_[large_bundles[left]]) witness_[item] = (*matched)[left];
    return true;
  }

  const Instance& inst_;
  const FptOptions& opts_;
  int n_;
  EnvyTracker tracker_;
  std::vector<int> type_of_;
  std::vector<int> type_size_;

  std::vector<int> remaining_;
  std::vector<int> small_;
  std::vector<int> large_agents_;
  std::vector<std::vector<int>> bundles_;
  std::vector<Value> bundle_value_;
  std::vector<int> target_;
  std::vector<int> granted_;
  std::vector<int> witness_;
  std::uint64_t nodes_ = 0;
  bool limit_hit_ = false;
};

}  // namespace

SolveOutcome solve_fpt_k_nt(const Instance& inst, const FptOptions& opts) {
  if (inst.query.variant != Query::Variant::Efae)
    throw Error(ErrorCode::WrongVariant, "open-item branching solver handles EFAE only");
  return FptEngine(inst, opts).run();
}

}  // namespace efae
