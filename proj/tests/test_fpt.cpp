#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "efae/checks.hpp"
#include "efae/fpt_open_items.hpp"
#include "efae/graphs.hpp"
#include "efae/oracle.hpp"
#include "efae/reductions.hpp"
#include "test_util.hpp"

using namespace efae;
using testutil::make_inst;

namespace {

constexpr int kOpen = Instance::kOpen;

// Random instances with deliberately repeated rows so both small and large
// agent types occur.
Instance random_instance(testutil::Rng& rng, int max_n, int max_k, Value vmax) {
  const int n = 2 + rng.below(max_n - 1);
  const int m = 1 + rng.below(6);
  const int distinct = 1 + rng.below(3);
  std::vector<std::vector<Value>> rows(distinct, std::vector<Value>(m));
  for (auto& row : rows)
    for (Value& v : row) v = rng.below(static_cast<int>(vmax) + 1);
  std::vector<std::vector<Value>> values(n);
  for (int i = 0; i < n; ++i) values[i] = rows[rng.below(distinct)];
  std::vector<int> owners(m, kOpen);
  int opens = 0;
  for (int a = 0; a < m; ++a) {
    if (opens < max_k && rng.below(2) == 0)
      ++opens;
    else
      owners[a] = rng.below(n);
  }
  return make_inst(std::move(values), std::move(owners));
}

void expect_agreement(const Instance& inst) {
  const SolveOutcome brute = solve_bruteforce(inst);
  const SolveOutcome fpt = solve_fpt_k_nt(inst);
  REQUIRE(brute.answer != Answer::ResourceLimit);
  REQUIRE(fpt.answer != Answer::ResourceLimit);
  REQUIRE(fpt.answer == brute.answer);
  if (fpt.answer == Answer::Yes) {
    REQUIRE(fpt.witness.has_value());
    CHECK(allocation_extends(inst, *fpt.witness));
    CHECK(is_envy_free(inst, fpt.witness->owner_of));
  }
}

}  // namespace

TEST_CASE("no open items: the fixed part decides") {
  const SolveOutcome yes = solve_fpt_k_nt(make_inst({{1, 0}, {0, 1}}, {0, 1}));
  CHECK(yes.answer == Answer::Yes);
  REQUIRE(yes.witness.has_value());
  CHECK(yes.witness->owner_of == std::vector<int>{0, 1});
  CHECK(solve_fpt_k_nt(make_inst({{0, 1}, {1, 0}}, {0, 1})).answer == Answer::No);
}

TEST_CASE("rejects restricted and capped queries") {
  const Instance refae = make_inst({{1}, {1}}, {kOpen}, Query::refae({0}));
  CHECK_THROWS_WITH_AS(solve_fpt_k_nt(refae), doctest::Contains("WRONG_VARIANT"), Error);
  const Instance fefae = make_inst({{1}, {1}}, {kOpen}, Query::fefae(1));
  CHECK_THROWS_AS(solve_fpt_k_nt(fefae), Error);
}

TEST_CASE("clique gadgets: triangle yes, near-triangle no") {
  // One vertex per color, all three edges: the triangle itself is the clique.
  const ColoredGraph triangle =
      parse_colored_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3\nc 1 1\nc 2 2\nc 3 3\n");
  const Instance yes_inst = mcq_to_efae(triangle);
  expect_agreement(yes_inst);
  CHECK(solve_fpt_k_nt(yes_inst).answer == Answer::Yes);

  // Two vertices in color 1 splitting the edges: every color pair is served
  // but no single color-1 vertex reaches both others.
  const ColoredGraph no_triangle =
      parse_colored_graph("p 4 3\ne 1 3\ne 3 4\ne 2 4\nc 1 1\nc 2 1\nc 3 2\nc 4 3\n");
  const Instance no_inst = mcq_to_efae(no_triangle);
  expect_agreement(no_inst);
  CHECK(solve_fpt_k_nt(no_inst).answer == Answer::No);
}

TEST_CASE("agreement on the exhaustive small sweep") {
  // All value matrices for tiny shapes, all partial assignments.
  const struct { int n, m; Value vmax; } shapes[] = {{2, 2, 2}, {2, 3, 1}, {3, 2, 1}};
  for (const auto& shape : shapes) {
    const int cells = shape.n * shape.m;
    const int base = static_cast<int>(shape.vmax) + 1;
    long long matrices = 1;
    for (int c = 0; c < cells; ++c) matrices *= base;
    long long owner_codes = 1;
    for (int a = 0; a < shape.m; ++a) owner_codes *= shape.n + 1;
    for (long long code = 0; code < matrices; ++code) {
      std::vector<std::vector<Value>> values(shape.n, std::vector<Value>(shape.m));
      long long rest = code;
      for (int c = 0; c < cells; ++c) {
        values[c / shape.m][c % shape.m] = rest % base;
        rest /= base;
      }
      for (long long oc = 0; oc < owner_codes; ++oc) {
        std::vector<int> owners(shape.m);
        long long orest = oc;
        for (int a = 0; a < shape.m; ++a) {
          owners[a] = static_cast<int>(orest % (shape.n + 1)) - 1;
          orest /= shape.n + 1;
        }
        expect_agreement(make_inst(values, owners));
      }
    }
  }
}

TEST_CASE("agreement on random instances with clustered agent types") {
  testutil::Rng rng(21);
  for (int round = 0; round < 400; ++round)
    expect_agreement(random_instance(rng, 6, 4, 4));
}

TEST_CASE("same-type agents end with equal bundle values") {
  // Two consequences of envy-freeness among agents sharing a valuation row:
  // their final bundles are worth the same, and a type that outnumbers the
  // open items while starting from equal fixed bundles gains nothing at all
  // (some member must come away empty-handed, and the rest must match it).
  testutil::Rng rng(22);
  int yes_seen = 0, starved_types = 0;
  for (int round = 0; round < 400; ++round) {
    const Instance inst = random_instance(rng, 6, 3, 3);
    const SolveOutcome outcome = solve_fpt_k_nt(inst);
    if (outcome.answer != Answer::Yes) continue;
    ++yes_seen;
    const TypePartition tp = compute_types(inst);
    const int k = inst.open_count();
    const auto full = bundle_value_matrix(inst, outcome.witness->owner_of);
    const auto fixed = bundle_value_matrix(inst, inst.owner_of);
    for (int t = 0; t < tp.agent_type_count(); ++t) {
      const auto& members = tp.agent_type_members[t];
      bool uniform_start = true;
      for (int i : members) {
        CHECK(full[i][i] == full[members[0]][members[0]]);
        uniform_start = uniform_start && fixed[i][i] == fixed[members[0]][members[0]];
      }
      if (static_cast<int>(members.size()) <= k || !uniform_start) continue;
      ++starved_types;
      for (int i : members) CHECK(full[i][i] == fixed[i][i]);
    }
  }
  CHECK(yes_seen >= 50);
  CHECK(starved_types > 0);
}

TEST_CASE("node counts stay under the declared bound") {
  testutil::Rng rng(23);
  for (int round = 0; round < 100; ++round) {
    const Instance inst = random_instance(rng, 5, 3, 3);
    const SolveOutcome outcome = solve_fpt_k_nt(inst);
    const int n_t = compute_types(inst).agent_type_count();
    const long double bound = fpt_branch_bound(inst.open_count(), inst.n(), n_t);
    CHECK(static_cast<long double>(outcome.stats.nodes) <= bound);
  }
}

TEST_CASE("witnesses are deterministic") {
  testutil::Rng rng(24);
  for (int round = 0; round < 50; ++round) {
    const Instance inst = random_instance(rng, 5, 3, 3);
    const SolveOutcome a = solve_fpt_k_nt(inst);
    const SolveOutcome b = solve_fpt_k_nt(inst);
    CHECK(a.answer == b.answer);
    if (a.witness) CHECK(a.witness->owner_of == b.witness->owner_of);
  }
}

TEST_CASE("node budget yields a resource-limit outcome") {
  const Instance inst = make_inst({{3, 3, 3}, {3, 3, 3}, {1, 1, 1}},
                                  {kOpen, kOpen, kOpen});
  FptOptions opts;
  opts.node_budget = 1;
  CHECK(solve_fpt_k_nt(inst, opts).answer == Answer::ResourceLimit);
}

TEST_CASE("hall pruning does not change answers") {
  testutil::Rng rng(25);
  for (int round = 0; round < 200; ++round) {
    const Instance inst = random_instance(rng, 6, 3, 3);
    FptOptions no_hall;
    no_hall.hall_prune = false;
    CHECK(solve_fpt_k_nt(inst).answer == solve_fpt_k_nt(inst, no_hall).answer);
  }
}

TEST_CASE("matching helper") {
  const auto edge_all = [](int, int) { return true; };
  const auto none = saturating_matching(0, {}, edge_all);
  REQUIRE(none.has_value());
  CHECK(none->empty());

  // Two left nodes, one candidate: pigeonhole.
  CHECK_FALSE(saturating_matching(2, {7}, edge_all).has_value());

  const auto perfect = saturating_matching(2, {4, 9}, edge_all);
  REQUIRE(perfect.has_value());
  CHECK((*perfect)[0] != (*perfect)[1]);

  // Forced alternation: left 0 only fits right 9, pushing left 1 to right 4.
  const auto forced = saturating_matching(
      2, {4, 9}, [](int left, int right) { return left == 0 ? right == 9 : true; });
  REQUIRE(forced.has_value());
  CHECK((*forced)[0] == 9);
  CHECK((*forced)[1] == 4);
}
