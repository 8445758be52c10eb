#include "efae/checks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace efae {
namespace {

void validate_query(const Instance& inst) {
  const Query& q = inst.query;
  switch (q.variant) {
    case Query::Variant::Efae:
      if (!q.recipients.empty() || q.p != 0)
        throw Error(ErrorCode::BadQuery, "EFAE query carries extra parameters");
      break;
    case Query::Variant::Refae: {
      std::set<int> seen;
      for (int r : q.recipients) {
        if (r < 0 || r >= inst.n())
          throw Error(ErrorCode::BadQuery, "recipient index out of range");
        if (!seen.insert(r).second)
          throw Error(ErrorCode::BadQuery, "recipient listed twice");
      }
      if (!std::is_sorted(q.recipients.begin(), q.recipients.end()))
        throw Error(ErrorCode::BadQuery, "recipients not sorted");
      break;
    }
    case Query::Variant::Fefae:
      if (q.p < 1 || q.p > inst.n())
        throw Error(ErrorCode::BadQuery, "p outside [1, n]");
      break;
  }
}

}  // namespace

Instance validate_instance(Instance inst) {
  const int n = inst.n();
  const int m = inst.m();
  if (n < 1) throw Error(ErrorCode::BadQuery, "instance needs at least one agent");

  std::unordered_set<std::string> ids;
  for (const auto& id : inst.agent_ids)
    if (id.empty() || !ids.insert(id).second)
      throw Error(ErrorCode::DuplicateId, "agent id '" + id + "'");
  ids.clear();
  for (const auto& id : inst.item_ids)
    if (id.empty() || !ids.insert(id).second)
      throw Error(ErrorCode::DuplicateId, "item id '" + id + "'");

  if (static_cast<int>(inst.valuations.size()) != n)
    throw Error(ErrorCode::SchemaError, "valuation row count != agent count");
  for (const auto& row : inst.valuations) {
    if (static_cast<int>(row.size()) != m)
      throw Error(ErrorCode::SchemaError, "valuation row length != item count");
    Value sum = 0;
    for (Value v : row) {
      if (v < 0) throw Error(ErrorCode::NegativeValue, "valuations must be non-negative");
      if (v > kValueSumLimit - sum)
        throw Error(ErrorCode::OverflowRisk, "valuation row sum too large");
      sum += v;
    }
  }

  if (static_cast<int>(inst.owner_of.size()) != m)
    throw Error(ErrorCode::SchemaError, "owner vector length != item count");
  for (int owner : inst.owner_of)
    if (owner != Instance::kOpen && (owner < 0 || owner >= n))
      throw Error(ErrorCode::SchemaError, "assigned owner index out of range");

  validate_query(inst);
  return inst;
}

TypePartition compute_types(const Instance& inst) {
  TypePartition tp;
  const int n = inst.n();
  const int m = inst.m();
  tp.agent_type_of.resize(n);
  tp.item_type_of.resize(m);

  std::map<std::vector<Value>, int> row_type;
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = row_type.try_emplace(inst.valuations[i], tp.agent_type_count());
    if (fresh) tp.agent_type_members.emplace_back();
    tp.agent_type_of[i] = it->second;
    tp.agent_type_members[it->second].push_back(i);
  }

  std::map<std::vector<Value>, int> col_type;
  std::vector<Value> col(n);
  for (int a = 0; a < m; ++a) {
    for (int i = 0; i < n; ++i) col[i] = inst.valuations[i][a];
    auto [it, fresh] = col_type.try_emplace(col, tp.item_type_count());
    if (fresh) tp.item_type_members.emplace_back();
    tp.item_type_of[a] = it->second;
    tp.item_type_members[it->second].push_back(a);
  }
  return tp;
}

Value bundle_value(const Instance& inst, int evaluator, const std::vector<int>& owner_of,
                   int owner_agent) {
  Value sum = 0;
  for (int a = 0; a < inst.m(); ++a)
    if (owner_of[a] == owner_agent) sum = checked_add(sum, inst.value(evaluator, a));
  return sum;
}

std::vector<std::vector<Value>> bundle_value_matrix(const Instance& inst,
                                                    const std::vector<int>& owner_of) {
  const int n = inst.n();
  std::vector<std::vector<Value>> val(n, std::vector<Value>(n, 0));
  for (int a = 0; a < inst.m(); ++a) {
    const int owner = owner_of[a];
    if (owner == Instance::kOpen) continue;
    for (int i = 0; i < n; ++i) val[i][owner] = checked_add(val[i][owner], inst.value(i, a));
  }
  return val;
}

std::vector<std::pair<int, int>> envy_pairs(const Instance& inst,
                                            const std::vector<int>& owner_of) {
  auto val = bundle_value_matrix(inst, owner_of);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < inst.n(); ++i)
    for (int j = 0; j < inst.n(); ++j)
      if (i != j && val[i][i] < val[i][j]) pairs.emplace_back(i, j);
  return pairs;
}

bool is_envy_free(const Instance& inst, const std::vector<int>& owner_of) {
  auto val = bundle_value_matrix(inst, owner_of);
  for (int i = 0; i < inst.n(); ++i)
    for (int j = 0; j < inst.n(); ++j)
      if (i != j && val[i][i] < val[i][j]) return false;
  return true;
}

namespace {

// Shared core for the two relaxations. For a pair (i, j) the best removable
// item is the one i values most, the worst is the one i values least; EF1
// needs the former to cancel envy, EFX the latter.
bool relaxed_check(const Instance& inst, const std::vector<int>& owner_of, bool take_max) {
  const int n = inst.n();
  auto val = bundle_value_matrix(inst, owner_of);
  constexpr Value kUnset = -1;
  // extreme[i][j]: max (or min) value i assigns to a single item of j's bundle.
  std::vector<std::vector<Value>> extreme(n, std::vector<Value>(n, kUnset));
  for (int a = 0; a < inst.m(); ++a) {
    const int owner = owner_of[a];
    if (owner == Instance::kOpen) continue;
    for (int i = 0; i < n; ++i) {
      Value v = inst.value(i, a);
      Value& e = extreme[i][owner];
      if (e == kUnset)
        e = v;
      else
        e = take_max ? std::max(e, v) : std::min(e, v);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || val[i][i] >= val[i][j]) continue;
      if (extreme[i][j] == kUnset) continue;  // empty bundle cannot be envied anyway
      if (val[i][i] < val[i][j] - extreme[i][j]) return false;
    }
  return true;
}

}  // namespace

bool is_ef1(const Instance& inst, const std::vector<int>& owner_of) {
  return relaxed_check(inst, owner_of, /*take_max=*/true);
}

bool is_efx(const Instance& inst, const std::vector<int>& owner_of) {
  return relaxed_check(inst, owner_of, /*take_max=*/false);
}

bool allocation_extends(const Instance& inst, const Allocation& alloc) {
  if (static_cast<int>(alloc.owner_of.size()) != inst.m()) return false;
  for (int a = 0; a < inst.m(); ++a) {
    const int owner = alloc.owner_of[a];
    if (owner < 0 || owner >= inst.n()) return false;
    if (inst.owner_of[a] != Instance::kOpen && inst.owner_of[a] != owner) return false;
  }
  return true;
}

}  // namespace efae
