#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace efae {

using Value = std::int64_t;

// Row sums are capped here so that any comparison of two bundle values,
// and any single ILP constraint evaluation, stays inside int64 range.
inline constexpr Value kValueSumLimit = std::numeric_limits<Value>::max() / 8;

enum class ErrorCode {
  NegativeValue,
  DuplicateId,
  BadQuery,
  OverflowRisk,
  Overflow,
  WrongVariant,
  ValuesTooLarge,
  GammaNotEf,
  MalformedGraph,
  NotAClique,
  BadParams,
  InternalInvariantViolation,
  ParseError,
  SchemaError,
  GenRetryExhausted,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

Value checked_add(Value a, Value b);
Value checked_mul(Value a, Value b);

struct Query {
  enum class Variant { Efae, Refae, Fefae };

  Variant variant = Variant::Efae;
  std::vector<int> recipients;  // REFAE only, sorted agent indices
  int p = 0;                    // FEFAE only

  static Query efae() { return Query{}; }
  static Query refae(std::vector<int> recipients) {
    Query q;
    q.variant = Variant::Refae;
    q.recipients = std::move(recipients);
    return q;
  }
  static Query fefae(int p) {
    Query q;
    q.variant = Variant::Fefae;
    q.p = p;
    return q;
  }
};

const char* to_string(Query::Variant variant);

// A problem instance: agents with additive integer valuations over items,
// a partial assignment of some items, and the query to answer. Items not
// present in the assignment are "open" and are the objects the solvers place.
struct Instance {
  static constexpr int kOpen = -1;

  std::vector<std::string> agent_ids;
  std::vector<std::string> item_ids;
  std::vector<std::vector<Value>> valuations;  // n rows of m entries
  std::vector<int> owner_of;                   // per item: agent index or kOpen
  Query query;

  int n() const { return static_cast<int>(agent_ids.size()); }
  int m() const { return static_cast<int>(item_ids.size()); }

  Value value(int agent, int item) const { return valuations[agent][item]; }

  std::vector<int> open_items() const {
    std::vector<int> open;
    for (int a = 0; a < m(); ++a)
      if (owner_of[a] == kOpen) open.push_back(a);
    return open;
  }

  int open_count() const {
    int k = 0;
    for (int owner : owner_of) k += owner == kOpen;
    return k;
  }
};

// A complete assignment of every item to an agent.
struct Allocation {
  std::vector<int> owner_of;
};

struct TypePartition {
  std::vector<int> agent_type_of;  // agent -> type id, contiguous from 0
  std::vector<int> item_type_of;
  std::vector<std::vector<int>> agent_type_members;
  std::vector<std::vector<int>> item_type_members;

  int agent_type_count() const { return static_cast<int>(agent_type_members.size()); }
  int item_type_count() const { return static_cast<int>(item_type_members.size()); }
};

enum class Answer { Yes, No, ResourceLimit };

const char* to_string(Answer answer);

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t states = 0;
  double millis = 0.0;
};

struct SolveOutcome {
  Answer answer = Answer::No;
  std::optional<Allocation> witness;  // present iff answer == Yes
  SolveStats stats;
};

}  // namespace efae
