#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "efae/checks.hpp"
#include "efae/oracle.hpp"
#include "test_util.hpp"

using namespace efae;
using testutil::make_inst;

namespace {
constexpr int kOpen = Instance::kOpen;
}

TEST_CASE("no open items: the fixed part decides") {
  const Instance good = make_inst({{1, 0}, {0, 1}}, {0, 1});
  const SolveOutcome yes = solve_bruteforce(good);
  CHECK(yes.answer == Answer::Yes);
  REQUIRE(yes.witness.has_value());
  CHECK(yes.witness->owner_of == good.owner_of);

  const Instance bad = make_inst({{0, 1}, {1, 0}}, {0, 1});
  CHECK(solve_bruteforce(bad).answer == Answer::No);
}

TEST_CASE("witness is the lexicographically first completion") {
  // All-zero values: every completion is envy-free; the first one in scan
  // order gives everything to agent 0.
  const Instance zeros = make_inst({{0, 0}, {0, 0}}, {kOpen, kOpen});
  const SolveOutcome outcome = solve_bruteforce(zeros);
  REQUIRE(outcome.witness.has_value());
  CHECK(outcome.witness->owner_of == std::vector<int>{0, 0});

  // Giving both items to agent 0 fails, so the scan moves the second item on.
  const Instance skewed = make_inst({{3, 3}, {3, 3}}, {kOpen, kOpen});
  const SolveOutcome later = solve_bruteforce(skewed);
  REQUIRE(later.witness.has_value());
  CHECK(later.witness->owner_of == std::vector<int>{0, 1});
  CHECK(is_envy_free(skewed, later.witness->owner_of));
}

TEST_CASE("exhausted scans count every leaf") {
  const Instance inst = make_inst({{5, 0}, {5, 0}}, {kOpen, 0});
  const SolveOutcome outcome = solve_bruteforce(inst);
  CHECK(outcome.answer == Answer::No);
  CHECK(outcome.stats.nodes == 2);  // one open item, two candidate agents
}

TEST_CASE("restricted recipients limit the candidates") {
  // Each agent wants its own item; only agent 1 may receive the open one.
  const Instance inst = make_inst({{2, 0}, {0, 2}}, {0, kOpen}, Query::refae({1}));
  const SolveOutcome outcome = solve_bruteforce(inst);
  CHECK(outcome.answer == Answer::Yes);
  REQUIRE(outcome.witness.has_value());
  CHECK(outcome.witness->owner_of == std::vector<int>{0, 1});

  // The same instance restricted to agent 0 forces agent 1 into envy.
  const Instance blocked = make_inst({{2, 0}, {0, 2}}, {0, kOpen}, Query::refae({0}));
  CHECK(solve_bruteforce(blocked).answer == Answer::No);
}

TEST_CASE("free recipient choice scans subsets in rank order") {
  // Any single agent may absorb the open item; p = 1 suffices.
  const Instance single = make_inst({{0, 0}, {0, 0}}, {kOpen, kOpen}, Query::fefae(1));
  const SolveOutcome outcome = solve_bruteforce(single);
  CHECK(outcome.answer == Answer::Yes);
  REQUIRE(outcome.witness.has_value());
  CHECK(outcome.witness->owner_of == std::vector<int>{0, 0});

  // p = 2 but a one-recipient completion is found inside the first subset.
  const Instance padded = make_inst({{1, 0}, {0, 0}, {0, 0}}, {kOpen, kOpen}, Query::fefae(2));
  CHECK(solve_bruteforce(padded).answer == Answer::Yes);
}

TEST_CASE("free recipient answers match unrestricted answers when p = n") {
  testutil::Rng rng(11);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + rng.below(3), m = 1 + rng.below(4);
    std::vector<std::vector<Value>> values(n, std::vector<Value>(m));
    for (auto& row : values)
      for (Value& v : row) v = rng.below(4);
    std::vector<int> owners(m);
    for (int& o : owners) o = rng.below(n + 1) - 1;  // kOpen or an agent
    const Instance efae = make_inst(values, owners);
    const Instance fefae = make_inst(values, owners, Query::fefae(n));
    CHECK(solve_bruteforce(efae).answer == solve_bruteforce(fefae).answer);
  }
}

TEST_CASE("restricting to all agents changes nothing") {
  testutil::Rng rng(12);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + rng.below(3), m = 1 + rng.below(4);
    std::vector<std::vector<Value>> values(n, std::vector<Value>(m));
    for (auto& row : values)
      for (Value& v : row) v = rng.below(4);
    std::vector<int> owners(m);
    for (int& o : owners) o = rng.below(n + 1) - 1;
    const Instance efae = make_inst(values, owners);
    const Instance refae = make_inst(values, owners, Query::refae(testutil::all_agents(efae)));
    CHECK(solve_bruteforce(efae).answer == solve_bruteforce(refae).answer);
  }
}

TEST_CASE("leaf budget turns into a resource-limit outcome") {
  const Instance inst = make_inst({{5, 0, 0}, {5, 0, 0}}, {kOpen, kOpen, kOpen});
  OracleOptions opts;
  opts.leaf_budget = 1;
  CHECK(solve_bruteforce(inst, opts).answer == Answer::ResourceLimit);

  opts.leaf_budget = 1'000'000;
  opts.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK(solve_bruteforce(inst, opts).answer == Answer::ResourceLimit);
}

TEST_CASE("relaxed acceptance: one item each plus a double-valued open item") {
  const Instance inst = make_inst({{1, 1, 2}, {1, 1, 2}}, {0, 1, kOpen});
  CHECK(solve_bruteforce_relaxed(inst, Notion::Efx).answer == Answer::No);
  const SolveOutcome ef1 = solve_bruteforce_relaxed(inst, Notion::Ef1);
  CHECK(ef1.answer == Answer::Yes);
  REQUIRE(ef1.witness.has_value());
  CHECK(is_ef1(inst, ef1.witness->owner_of));
  CHECK(solve_bruteforce(inst).answer == Answer::No);
}

TEST_CASE("relaxed acceptance: open items valued 3, 4 and 9") {
  const Instance inst =
      make_inst({{1, 1, 3, 4, 9}, {1, 1, 3, 4, 9}}, {0, 1, kOpen, kOpen, kOpen});
  CHECK(solve_bruteforce_relaxed(inst, Notion::Efx).answer == Answer::No);
  const SolveOutcome ef1 = solve_bruteforce_relaxed(inst, Notion::Ef1);
  CHECK(ef1.answer == Answer::Yes);
  REQUIRE(ef1.witness.has_value());
  CHECK(is_ef1(inst, ef1.witness->owner_of));
}

TEST_CASE("crossed two-item assignment admits no relaxed-by-one completion") {
  Instance inst;
  inst.agent_ids = {"1", "2"};
  inst.item_ids = {"x", "y", "z"};
  inst.valuations = {{10, 0, 1}, {0, 10, 1}};
  inst.owner_of = {1, 0, kOpen};
  inst.query = Query::efae();
  inst = validate_instance(std::move(inst));
  CHECK(solve_bruteforce_relaxed(inst, Notion::Ef1).answer == Answer::No);
}

TEST_CASE("relaxed scan with the exact notion equals the plain scan") {
  testutil::Rng rng(13);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + rng.below(2), m = 1 + rng.below(4);
    std::vector<std::vector<Value>> values(n, std::vector<Value>(m));
    for (auto& row : values)
      for (Value& v : row) v = rng.below(3);
    std::vector<int> owners(m);
    for (int& o : owners) o = rng.below(n + 1) - 1;
    const Instance inst = make_inst(values, owners);
    CHECK(solve_bruteforce(inst).answer ==
          solve_bruteforce_relaxed(inst, Notion::Ef).answer);
  }
}

TEST_CASE("every witness extends the fixed assignment") {
  testutil::Rng rng(14);
  for (int round = 0; round < 300; ++round) {
    const int n = 2 + rng.below(3), m = 1 + rng.below(4);
    std::vector<std::vector<Value>> values(n, std::vector<Value>(m));
    for (auto& row : values)
      for (Value& v : row) v = rng.below(4);
    std::vector<int> owners(m);
    for (int& o : owners) o = rng.below(n + 1) - 1;
    const Instance inst = make_inst(values, owners);
    const SolveOutcome outcome = solve_bruteforce(inst);
    if (outcome.answer != Answer::Yes) continue;
    REQUIRE(outcome.witness.has_value());
    CHECK(allocation_extends(inst, *outcome.witness));
    CHECK(is_envy_free(inst, outcome.witness->owner_of));
  }
}

TEST_CASE("notion names round-trip") {
  CHECK(parse_notion("ef") == Notion::Ef);
  CHECK(parse_notion("ef1") == Notion::Ef1);
  CHECK(parse_notion("efx") == Notion::Efx);
  CHECK_FALSE(parse_notion("nope").has_value());
  CHECK(std::string(to_string(Notion::Efx)) == "efx");
}
