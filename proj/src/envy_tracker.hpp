#pragma once

#include <vector>

#include "efae/types.hpp"

namespace efae {

// Maintains per-pair bundle values and the ordered envy-pair count of a
// working assignment under single-item moves. Moving one item touches two
// bundles, so each move costs O(n).
class EnvyTracker {
 public:
  explicit EnvyTracker(const Instance& inst)
      : inst_(inst), n_(inst.n()), owner_(inst.owner_of) {
    val_.assign(static_cast<size_t>(n_) * n_, 0);
    envious_.assign(static_cast<size_t>(n_) * n_, 0);
    envies_out_.assign(n_, 0);
    for (int a = 0; a < inst_.m(); ++a)
      if (owner_[a] != Instance::kOpen)
        for (int i = 0; i < n_; ++i) val_[i * n_ + owner_[a]] += inst_.value(i, a);
    for (int x = 0; x < n_; ++x) refresh_agent(x);
  }

  void set_owner(int item, int agent) {
    const int old = owner_[item];
    if (old == agent) return;
    owner_[item] = agent;
    for (int i = 0; i < n_; ++i) {
      const Value v = inst_.value(i, item);
      if (old != Instance::kOpen) val_[i * n_ + old] -= v;
      val_[i * n_ + agent] += v;
    }
    if (old != Instance::kOpen) refresh_agent(old);
    refresh_agent(agent);
  }

  void set_open(int item) {
    const int old = owner_[item];
    if (old == Instance::kOpen) return;
    owner_[item] = Instance::kOpen;
    for (int i = 0; i < n_; ++i) val_[i * n_ + old] -= inst_.value(i, item);
    refresh_agent(old);
  }

  int envy_count() const { return envy_count_; }

  bool envious(int i, int j) const { return envious_[i * n_ + j] != 0; }

  Value val(int i, int j) const { return val_[i * n_ + j]; }

  int first_envious_agent() const {
    for (int i = 0; i < n_; ++i)
      if (envies_out_[i] > 0) return i;
    return -1;
  }

  const std::vector<int>& owner() const { return owner_; }

 private:
  void refresh_agent(int x) {
    for (int i = 0; i < n_; ++i) {
      if (i == x) continue;
      update_pair(i, x);
      update_pair(x, i);
    }
  }

  void update_pair(int i, int j) {
    const char now = val_[i * n_ + i] < val_[i * n_ + j] ? 1 : 0;
    char& stored = envious_[i * n_ + j];
    if (now != stored) {
      envy_count_ += now - stored;
      envies_out_[i] += now - stored;
      stored = now;
    }
  }

  const Instance& inst_;
  int n_;
  std::vector<int> owner_;
  std::vector<Value> val_;
  std::vector<char> envious_;
  std::vector<int> envies_out_;
  int envy_count_ = 0;
};

}  // namespace efae
