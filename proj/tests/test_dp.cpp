#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "efae/checks.hpp"
#include "efae/dp_recipients.hpp"
#include "efae/graphs.hpp"
#include "efae/oracle.hpp"
#include "efae/reductions.hpp"
#include "test_util.hpp"

using namespace efae;
using testutil::make_inst;

namespace {

constexpr int kOpen = Instance::kOpen;

// Random restricted/capped instances with repeated rows and small values.
Instance random_instance(testutil::Rng& rng, bool fefae) {
  const int n = 2 + rng.below(4);
  const int m = 1 + rng.below(5);
  const int distinct = 1 + rng.below(3);
  std::vector<std::vector<Value>> rows(distinct, std::vector<Value>(m));
  for (auto& row : rows)
    for (Value& v : row) v = rng.below(4);
  std::vector<std::vector<Value>> values(n);
  for (int i = 0; i < n; ++i) values[i] = rows[rng.below(distinct)];
  std::vector<int> owners(m);
  for (int& o : owners) o = rng.below(n + 1) - 1;

  Query query;
  const int p = 1 + rng.below(2);
  if (fefae) {
    query = Query::fefae(p);
  } else {
    std::vector<int> recipients;
    for (int i = 0; i < n && static_cast<int>(recipients.size()) < p; ++i)
      if (rng.below(2) == 0) recipients.push_back(i);
    if (recipients.empty()) recipients.push_back(rng.below(n));
    query = Query::refae(std::move(recipients));
  }
  return make_inst(std::move(values), std::move(owners), std::move(query));
}

Value total_item_value(const Instance& inst) {
  Value total = 0;
  for (int a = 0; a < inst.m(); ++a) {
    Value best = 0;
    for (int i = 0; i < inst.n(); ++i) best = std::max(best, inst.value(i, a));
    total += best;
  }
  return total;
}

void expect_agreement(const Instance& inst) {
  const SolveOutcome brute = solve_bruteforce(inst);
  const SolveOutcome dp = solve_dp_p_nt(inst);
  REQUIRE(brute.answer != Answer::ResourceLimit);
  REQUIRE(dp.answer != Answer::ResourceLimit);
  REQUIRE(dp.answer == brute.answer);
  if (dp.answer == Answer::Yes) {
    REQUIRE(dp.witness.has_value());
    CHECK(allocation_extends(inst, *dp.witness));
    CHECK(is_envy_free(inst, dp.witness->owner_of));
    if (inst.query.variant == Query::Variant::Refae) {
      for (int a : inst.open_items()) {
        const int owner = dp.witness->owner_of[a];
        CHECK(std::find(inst.query.recipients.begin(), inst.query.recipients.end(), owner) !=
              inst.query.recipients.end());
      }
    } else {
      std::set<int> used;
      for (int a : inst.open_items()) used.insert(dp.witness->owner_of[a]);
      CHECK(static_cast<int>(used.size()) <= inst.query.p);
    }
  }
}

}  // namespace

TEST_CASE("single recipient takes everything") {
  // With one recipient the allocation is forced; the answer is just a check.
  const Instance yes = make_inst({{2, 1}, {0, 0}}, {0, kOpen}, Query::refae({0}));
  const SolveOutcome outcome = solve_dp_p_nt(yes);
  CHECK(outcome.answer == Answer::Yes);
  REQUIRE(outcome.witness.has_value());
  CHECK(outcome.witness->owner_of == std::vector<int>{0, 0});

  const Instance no = make_inst({{2, 1}, {0, 3}}, {0, kOpen}, Query::refae({0}));
  CHECK(solve_dp_p_nt(no).answer == Answer::No);
}

TEST_CASE("independent-set gadgets: path yes, triangle no") {
  const Graph path = parse_graph("p 3 2\ne 1 2\ne 2 3\n");
  const Instance path_inst = is_to_refae(path, 2);
  expect_agreement(path_inst);
  CHECK(solve_dp_p_nt(path_inst).answer == Answer::Yes);

  const Graph triangle = parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  const Instance tri_inst = is_to_refae(triangle, 2);
  expect_agreement(tri_inst);
  CHECK(solve_dp_p_nt(tri_inst).answer == Answer::No);
}

TEST_CASE("rejects unrestricted queries and oversized values") {
  const Instance efae = make_inst({{1}}, {kOpen});
  CHECK_THROWS_WITH_AS(solve_dp_p_nt(efae), doctest::Contains("WRONG_VARIANT"), Error);

  const Instance big =
      make_inst({{200'000, 1}}, {kOpen, kOpen}, Query::refae({0}));
  CHECK_THROWS_WITH_AS(solve_dp_p_nt(big), doctest::Contains("VALUES_TOO_LARGE"), Error);
}

TEST_CASE("agreement on random restricted instances") {
  testutil::Rng rng(31);
  for (int round = 0; round < 400; ++round) expect_agreement(random_instance(rng, false));
}

TEST_CASE("agreement on random capped instances") {
  testutil::Rng rng(32);
  for (int round = 0; round < 400; ++round) expect_agreement(random_instance(rng, true));
}

TEST_CASE("state count respects the configuration bound") {
  testutil::Rng rng(33);
  for (int round = 0; round < 100; ++round) {
    const Instance inst = random_instance(rng, false);
    const SolveOutcome outcome = solve_dp_p_nt(inst);
    const int p = static_cast<int>(inst.query.recipients.size());
    const int n_t = compute_types(inst).agent_type_count();
    const long double cap =
        std::pow(static_cast<long double>(total_item_value(inst)) + 1, p * n_t);
    CHECK(static_cast<long double>(outcome.stats.states) <= cap);
  }
}

TEST_CASE("item processing order never changes the answer") {
  testutil::Rng rng(34);
  for (int round = 0; round < 150; ++round) {
    const Instance inst = random_instance(rng, rng.below(2) == 0);
    const SolveOutcome plain = solve_dp_p_nt(inst);

    std::vector<int> order = inst.open_items();
    for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
      std::swap(order[i], order[rng.below(i + 1)]);
    DpOptions opts;
    opts.item_order = order;
    const SolveOutcome shuffled = solve_dp_p_nt(inst, opts);
    CHECK(plain.answer == shuffled.answer);
    if (shuffled.answer == Answer::Yes)
      CHECK(is_envy_free(inst, shuffled.witness->owner_of));
  }
}

TEST_CASE("item order hook must be a permutation of the open items") {
  const Instance inst = make_inst({{1, 1}, {1, 1}}, {kOpen, kOpen}, Query::refae({0, 1}));
  DpOptions opts;
  opts.item_order = std::vector<int>{0, 0};
  CHECK_THROWS_WITH_AS(solve_dp_p_nt(inst, opts), doctest::Contains("BAD_PARAMS"), Error);
  opts.item_order = std::vector<int>{0};
  CHECK_THROWS_AS(solve_dp_p_nt(inst, opts), Error);
}

TEST_CASE("kept duplicate representative does not affect the answer") {
  testutil::Rng rng(35);
  for (int round = 0; round < 150; ++round) {
    const Instance inst = random_instance(rng, false);
    const SolveOutcome first = solve_dp_p_nt(inst);
    DpOptions opts;
    opts.prefer_last_backpointer = true;
    const SolveOutcome last = solve_dp_p_nt(inst, opts);
    CHECK(first.answer == last.answer);
    if (last.answer == Answer::Yes) {
      CHECK(is_envy_free(inst, last.witness->owner_of));
      CHECK(allocation_extends(inst, *last.witness));
    }
  }
}

TEST_CASE("state budget yields a resource-limit outcome") {
  const Instance inst = make_inst({{9, 8, 7, 6}, {1, 2, 3, 4}},
                                  {kOpen, kOpen, kOpen, kOpen}, Query::refae({0, 1}));
  DpOptions opts;
  opts.state_budget = 2;
  CHECK(solve_dp_p_nt(inst, opts).answer == Answer::ResourceLimit);
}
