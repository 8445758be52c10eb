#pragma once

#include <utility>
#include <vector>

#include "efae/types.hpp"

namespace efae {

// Validates ids, shapes, value ranges and the query; returns the instance
// unchanged on success. Throws Error otherwise.
Instance validate_instance(Instance inst);

// Groups agents with identical valuation rows and items with identical
// columns. Type ids follow first occurrence.
TypePartition compute_types(const Instance& inst);

// Value the evaluator places on owner_agent's bundle under owner_of.
// Entries equal to Instance::kOpen are counted as belonging to nobody,
// so partial assignments can be inspected directly.
Value bundle_value(const Instance& inst, int evaluator, const std::vector<int>& owner_of,
                   int owner_agent);

// val[i][j] = v_i(bundle of j) for every ordered pair.
std::vector<std::vector<Value>> bundle_value_matrix(const Instance& inst,
                                                    const std::vector<int>& owner_of);

// Ordered pairs (i, j) with v_i(bundle_i) < v_i(bundle_j), lexicographic.
std::vector<std::pair<int, int>> envy_pairs(const Instance& inst,
                                            const std::vector<int>& owner_of);

bool is_envy_free(const Instance& inst, const std::vector<int>& owner_of);

// Envy-free up to one item: every envied bundle contains some item whose
// removal would cancel the envy. Empty bundles can never be envied, so the
// condition holds vacuously against them.
bool is_ef1(const Instance& inst, const std::vector<int>& owner_of);

// Envy-free up to any item: removal of an arbitrary item (including
// zero-valued ones) from the envied bundle must cancel the envy.
bool is_efx(const Instance& inst, const std::vector<int>& owner_of);

inline bool is_envy_free(const Instance& inst, const Allocation& alloc) {
  return is_envy_free(inst, alloc.owner_of);
}
inline bool is_ef1(const Instance& inst, const Allocation& alloc) {
  return is_ef1(inst, alloc.owner_of);
}
inline bool is_efx(const Instance& inst, const Allocation& alloc) {
  return is_efx(inst, alloc.owner_of);
}

// True when alloc assigns every item and agrees with inst.owner_of wherever
// the latter is fixed.
bool allocation_extends(const Instance& inst, const Allocation& alloc);

}  // namespace efae
