#include "efae/oracle.hpp"

#include <algorithm>

#include "efae/checks.hpp"
#include "envy_tracker.hpp"

namespace efae {

const char* to_string(Notion notion) {
  switch (notion) {
    case Notion::Ef: return "ef";
    case Notion::Ef1: return "ef1";
    case Notion::Efx: return "efx";
  }
  return "unknown";
}

std::optional<Notion> parse_notion(const std::string& text) {
  if (text == "ef") return Notion::Ef;
  if (text == "ef1") return Notion::Ef1;
  if (text == "efx") return Notion::Efx;
  return std::nullopt;
}

namespace {

// Big-endian odometer over the open-item slots: slot order is item index
// order and each slot runs through the candidate list in ascending order, so
// completions appear in lexicographic order and the first witness found is
// the lexicographically least one.
class Scanner {
 public:
  Scanner(const Instance& inst, Notion notion)
      : inst_(inst), notion_(notion), tracker_(inst), opens_(inst.open_items()) {}

  bool scan(const std::vector<int>& cand, std::uint64_t leaf_budget, std::uint64_t& leaves,
            const std::optional<std::chrono::steady_clock::time_point>& deadline,
            bool& out_of_budget) {
    const int k = static_cast<int>(opens_.size());
    if (k == 0) {
      if (leaves >= leaf_budget) {
        out_of_budget = true;
        return false;
      }
      ++leaves;
      return leaf_ok();
    }
    if (cand.empty()) return false;
    const int c = static_cast<int>(cand.size());
    std::vector<int> digit(k, 0);
    for (int a : opens_) tracker_.set_owner(a, cand[0]);
    while (true) {
      if (leaves >= leaf_budget) {
        out_of_budget = true;
        return false;
      }
      ++leaves;
      if ((leaves & 0xfff) == 0 && deadline &&
          std::chrono::steady_clock::now() > *deadline) {
        out_of_budget = true;
        return false;
      }
      if (leaf_ok()) return true;
      int pos = k - 1;
      while (pos >= 0 && digit[pos] == c - 1) {
        digit[pos] = 0;
        tracker_.set_owner(opens_[pos], cand[0]);
        --pos;
      }
      if (pos < 0) return false;
      ++digit[pos];
      tracker_.set_owner(opens_[pos], cand[digit[pos]]);
    }
  }

  void reset_opens() {
    for (int a : opens_) tracker_.set_open(a);
  }

  const std::vector<int>& owner() const { return tracker_.owner(); }

 private:
  bool leaf_ok() const {
    if (notion_ == Notion::Ef) return tracker_.envy_count() == 0;
    if (notion_ == Notion::Ef1) return is_ef1(inst_, tracker_.owner());
    return is_efx(inst_, tracker_.owner());
  }

  const Instance& inst_;
  Notion notion_;
  EnvyTracker tracker_;
  std::vector<int> opens_;
};

// Advances a size-p combination over {0..n-1} in rank order; false when done.
bool next_combination(std::vector<int>& comb, int n) {
  const int p = static_cast<int>(comb.size());
  int i = p - 1;
  while (i >= 0 && comb[i] == n - p + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < p; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

SolveOutcome run(const Instance& inst, Notion notion, const OracleOptions& opts) {
  const auto started = std::chrono::steady_clock::now();
  Scanner scanner(inst, notion);
  SolveOutcome out;
  std::uint64_t leaves = 0;
  bool out_of_budget = opts.deadline && started > *opts.deadline;
  bool found = false;
  if (out_of_budget) {
    out.answer = Answer::ResourceLimit;
    return out;
  }

  if (inst.query.variant == Query::Variant::Fefae && inst.open_count() > 0) {
    // Recipient sets of size exactly p, in rank order. A completion using
    // fewer than p recipients shows up inside some superset's scan.
    std::vector<int> comb(inst.query.p);
    for (int i = 0; i < inst.query.p; ++i) comb[i] = i;
    do {
      found = scanner.scan(comb, opts.leaf_budget, leaves, opts.deadline, out_of_budget);
      if (found || out_of_budget) break;
      scanner.reset_opens();
    } while (next_combination(comb, inst.n()));
  } else {
    std::vector<int> cand;
    if (inst.query.variant == Query::Variant::Refae)
      cand = inst.query.recipients;
    else
      for (int i = 0; i < inst.n(); ++i) cand.push_back(i);
    found = scanner.scan(cand, opts.leaf_budget, leaves, opts.deadline, out_of_budget);
  }

  out.stats.nodes = leaves;
  out.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();
  if (found) {
    out.answer = Answer::Yes;
    out.witness = Allocation{scanner.owner()};
  } else {
    out.answer = out_of_budget ? Answer::ResourceLimit : Answer::No;
  }
  return out;
}

}  // namespace

SolveOutcome solve_bruteforce(const Instance& inst, const OracleOptions& opts) {
  return run(inst, Notion::Ef, opts);
}

SolveOutcome solve_bruteforce_relaxed(const Instance& inst, Notion notion,
                                      const OracleOptions& opts) {
  return run(inst, notion, opts);
}

}  // namespace efae
