#pragma once

#include <vector>

#include "efae/graphs.hpp"
#include "efae/types.hpp"

namespace efae {

// Deterministic layout shared by the clique-gadget builder and the witness
// mappers: agent order, per-group ordinals, and the positions of the open
// items inside the built instance.
struct McqLayout {
  int q = 0;
  std::vector<std::vector<int>> classes;     // color -> vertices, input order
  std::vector<int> vertex_rank;              // vertex -> 1-based ordinal in class
  std::vector<int> edge_pair;                // edge idx -> pair rank
  std::vector<int> edge_rank;                // edge idx -> 1-based ordinal in pair
  std::vector<std::vector<int>> pair_edges;  // pair rank -> edge indices
  std::vector<int> vertex_agent;             // vertex -> agent index
  std::vector<int> edge_agent;               // edge idx -> agent index
  std::vector<int> s_item;                   // color -> open item index
  std::vector<int> t_item;                   // pair rank -> open item index
  int named_item_types = 0;                  // realized named type families
};

int pair_rank(int i, int j, int q);

McqLayout mcq_layout(const ColoredGraph& g);

// Clique gadget: one agent per vertex and per edge, pre-allocated bundles of
// square/triangle/star copies per group, and one open item per color and per
// color pair. The built EFAE instance has an envy-free completion exactly
// when g has a multicolored clique.
Instance mcq_to_efae(const ColoredGraph& g);

// The canonical envy-free completion induced by a multicolored clique.
Allocation clique_to_allocation(const ColoredGraph& g, const std::vector<int>& clique);

// Reads the recipients of the per-color open items out of an envy-free
// completion and returns the selected vertices, verifying adjacency.
std::vector<int> extract_clique(const ColoredGraph& g, const Instance& inst,
                                const Allocation& alloc);

// Independent-set gadget: one agent per edge plus a collector and a dump
// agent; one pre-assigned item per agent and one open item per vertex. The
// REFAE query restricts recipients to the two extra agents. With as_fefae the
// same instance carries a FEFAE query with p = 2 instead.
Instance is_to_refae(const Graph& g, int ell, bool as_fefae = false);

// Vertices whose open items were given to the collector agent; size and
// independence are re-checked against the valuations baked into inst.
std::vector<int> extract_independent_set(const Instance& inst, const Allocation& alloc);

}  // namespace efae
