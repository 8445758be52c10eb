#include "efae/reductions.hpp"

#include <algorithm>
#include <string>

#include "efae/checks.hpp"

namespace efae {

int pair_rank(int i, int j, int q) {
  if (i > j) std::swap(i, j);
  // pairs (0,1), (0,2), ..., (0,q-1), (1,2), ... in lexicographic order
  return i * q - i * (i + 1) / 2 + (j - i - 1);
}

namespace {

// Everything derivable without emitting items; the item positions are filled
// in by the builder below.
McqLayout layout_core(const ColoredGraph& g) {
  McqLayout lay;
  lay.q = g.num_colors;
  if (lay.q < 2) throw Error(ErrorCode::MalformedGraph, "need at least two colors");
  lay.classes = g.color_classes();
  lay.vertex_rank.assign(g.num_vertices, 0);
  for (const auto& cls : lay.classes)
    for (size_t r = 0; r < cls.size(); ++r) lay.vertex_rank[cls[r]] = static_cast<int>(r) + 1;

  const int pairs = lay.q * (lay.q - 1) / 2;
  lay.pair_edges.assign(pairs, {});
  lay.edge_pair.resize(g.edges.size());
  lay.edge_rank.resize(g.edges.size());
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const int pr = pair_rank(g.color_of[g.edges[e].first], g.color_of[g.edges[e].second], lay.q);
    lay.edge_pair[e] = pr;
    lay.pair_edges[pr].push_back(static_cast<int>(e));
    lay.edge_rank[e] = static_cast<int>(lay.pair_edges[pr].size());
  }
  for (int pr = 0; pr < pairs; ++pr)
    if (lay.pair_edges[pr].empty())
      throw Error(ErrorCode::MalformedGraph, "a color pair has no edge");

  lay.vertex_agent.resize(g.num_vertices);
  for (int v = 0; v < g.num_vertices; ++v) lay.vertex_agent[v] = v;
  lay.edge_agent.resize(g.edges.size());
  for (size_t e = 0; e < g.edges.size(); ++e)
    lay.edge_agent[e] = g.num_vertices + static_cast<int>(e);
  return lay;
}

// One named family of identical items: "box"/"tri"/"star" per color or color
// pair, plus the open items. color_b < 0 marks vertex-group families.
struct Family {
  std::string base_name;
  int kind;  // 0 box, 1 tri, 2 star, 3 open vertex item, 4 open edge item
  int color_a = -1;
  int color_b = -1;
};

class McqBuilder {
 public:
  McqBuilder(const ColoredGraph& g, McqLayout& lay) : g_(g), lay_(lay) {}

  Instance build() {
    const int q = lay_.q;
    const int pairs = q * (q - 1) / 2;
    const int num_agents = g_.num_vertices + static_cast<int>(g_.edges.size());

    // Pre-allocated families in color-then-pair order, then the open items.
    for (int c = 0; c < q; ++c) {
      const std::string tag = std::to_string(c + 1);
      add_family({"box" + tag, 0, c, -1}, bundle_copies_for_color(c, /*boxes=*/true));
      add_family({"tri" + tag, 1, c, -1}, bundle_copies_for_color(c, /*boxes=*/false));
      std::vector<int> stars;
      for (int v : lay_.classes[c]) stars.push_back(lay_.vertex_agent[v]);
      add_family({"star" + tag, 2, c, -1}, std::move(stars));
    }
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j) {
        const int pr = pair_rank(i, j, q);
        const std::string tag = std::to_string(i + 1) + "_" + std::to_string(j + 1);
        std::vector<int> boxes, tris, stars;
        for (int e : lay_.pair_edges[pr]) {
          const int z = lay_.edge_rank[e];
          const int m_ij = static_cast<int>(lay_.pair_edges[pr].size());
          append_copies(boxes, lay_.edge_agent[e], z);
          append_copies(tris, lay_.edge_agent[e], 2 * m_ij * m_ij - z * z - z);
          stars.push_back(lay_.edge_agent[e]);
        }
        add_family({"box" + tag, 0, i, j}, std::move(boxes));
        add_family({"tri" + tag, 1, i, j}, std::move(tris));
        add_family({"star" + tag, 2, i, j}, std::move(stars));
      }
    lay_.s_item.assign(q, -1);
    for (int c = 0; c < q; ++c) {
      lay_.s_item[c] = item_count();
      add_family({"s" + std::to_string(c + 1), 3, c, -1}, {Instance::kOpen});
    }
    lay_.t_item.assign(pairs, -1);
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j) {
        lay_.t_item[pair_rank(i, j, q)] = item_count();
        add_family({"t" + std::to_string(i + 1) + "_" + std::to_string(j + 1), 4, i, j},
                   {Instance::kOpen});
      }

    Instance inst;
    for (int v = 0; v < g_.num_vertices; ++v)
      inst.agent_ids.push_back("v" + std::to_string(v + 1));
    for (auto [u, v] : g_.edges)
      inst.agent_ids.push_back("e" + std::to_string(u + 1) + "_" + std::to_string(v + 1));
    inst.item_ids = item_ids_;
    inst.owner_of = owners_;
    inst.valuations.assign(num_agents, std::vector<Value>(item_count(), 0));
    for (int a = 0; a < num_agents; ++a)
      for (int it = 0; it < item_count(); ++it)
        inst.valuations[a][it] = value_of(a, families_[item_family_[it]]);
    inst.query = Query::efae();
    lay_.named_item_types = family_count();
    return validate_instance(std::move(inst));
  }

 private:
  int family_count() const { return static_cast<int>(families_.size()); }
  int item_count() const { return static_cast<int>(item_ids_.size()); }

  static void append_copies(std::vector<int>& out, int owner, int copies) {
    for (int c = 0; c < copies; ++c) out.push_back(owner);
  }

  // Copies of a vertex-group family: first the group's own agents, then the
  // mirroring edge agents, both in agent order.
  std::vector<int> bundle_copies_for_color(int c, bool boxes) {
    const int n_c = static_cast<int>(lay_.classes[c].size());
    std::vector<int> out;
    for (int v : lay_.classes[c]) {
      const int x = lay_.vertex_rank[v];
      append_copies(out, lay_.vertex_agent[v], boxes ? x : 2 * n_c * n_c - x * x - x);
    }
    for (size_t e = 0; e < g_.edges.size(); ++e) {
      for (int end : {g_.edges[e].first, g_.edges[e].second}) {
        if (g_.color_of[end] != c) continue;
        const int x = lay_.vertex_rank[end];
        append_copies(out, lay_.edge_agent[e], boxes ? x : 2 * n_c * n_c - x * x - x);
      }
    }
    return out;
  }

  void add_family(Family f, std::vector<int> item_owners) {
    if (item_owners.empty()) return;  // zero-copy families are not materialized
    const int fam = family_count();
    families_.push_back(std::move(f));
    int ordinal = 0;
    for (int owner : item_owners) {
      item_family_.push_back(fam);
      owners_.push_back(owner);
      if (families_[fam].kind >= 3)
        item_ids_.push_back(families_[fam].base_name);
      else
        item_ids_.push_back(families_[fam].base_name + "#" + std::to_string(++ordinal));
    }
  }

  Value own_bundle_value(int agent) const {
    if (agent < g_.num_vertices) {
      const int n_c = static_cast<int>(lay_.classes[g_.color_of[agent]].size());
      const int x = lay_.vertex_rank[agent];
      return static_cast<Value>(2 * n_c * n_c + x * x);
    }
    const int e = agent - g_.num_vertices;
    const int m_ij = static_cast<int>(lay_.pair_edges[lay_.edge_pair[e]].size());
    const int z = lay_.edge_rank[e];
    return static_cast<Value>(2 * m_ij * m_ij + z * z);
  }

  Value value_of(int agent, const Family& f) const {
    if (agent < g_.num_vertices) {
      const int my_color = g_.color_of[agent];
      const int x = lay_.vertex_rank[agent];
      const bool involves_me = f.color_a == my_color || f.color_b == my_color;
      switch (f.kind) {
        case 0: return f.color_b < 0 && f.color_a == my_color ? 2 * x + 1 : 0;
        case 1: return f.color_b < 0 && f.color_a == my_color ? 1 : 0;
        case 2:
          if (f.color_b < 0) return f.color_a == my_color ? 0 : own_bundle_value(agent);
          return involves_me ? 0 : own_bundle_value(agent);
        case 3: return f.color_a == my_color ? 1 : 0;
        case 4: return involves_me ? 1 : 0;
      }
      return 0;
    }
    const int e = agent - g_.num_vertices;
    const int my_pair = lay_.edge_pair[e];
    const int z = lay_.edge_rank[e];
    const bool my_family =
        f.color_b >= 0 && pair_rank(f.color_a, f.color_b, lay_.q) == my_pair;
    switch (f.kind) {
      case 0: return my_family ? 2 * z + 1 : 0;
      case 1: return my_family ? 1 : 0;
      case 2: return my_family ? 0 : own_bundle_value(agent);
      case 3: return 0;
      case 4: return my_family ? 1 : 0;
    }
    return 0;
  }

  const ColoredGraph& g_;
  McqLayout& lay_;
  std::vector<Family> families_;
  std::vector<int> item_family_;
  std::vector<int> owners_;
  std::vector<std::string> item_ids_;
};

}  // namespace

McqLayout mcq_layout(const ColoredGraph& g) {
  McqLayout lay = layout_core(g);
  McqBuilder(g, lay).build();  // fills in item positions and the family count
  return lay;
}

Instance mcq_to_efae(const ColoredGraph& g) {
  McqLayout lay = layout_core(g);
  return McqBuilder(g, lay).build();
}

Allocation clique_to_allocation(const ColoredGraph& g, const std::vector<int>& clique) {
  McqLayout lay = layout_core(g);
  Instance inst = McqBuilder(g, lay).build();

  if (static_cast<int>(clique.size()) != lay.q)
    throw Error(ErrorCode::NotAClique, "expected one vertex per color");
  std::vector<int> by_color(lay.q, -1);
  for (int v : clique) {
    if (v < 0 || v >= g.num_vertices) throw Error(ErrorCode::NotAClique, "vertex out of range");
    if (by_color[g.color_of[v]] != -1)
      throw Error(ErrorCode::NotAClique, "two vertices share a color");
    by_color[g.color_of[v]] = v;
  }

  Allocation alloc{inst.owner_of};
  for (int c = 0; c < lay.q; ++c) alloc.owner_of[lay.s_item[c]] = lay.vertex_agent[by_color[c]];
  for (int i = 0; i < lay.q; ++i)
    for (int j = i + 1; j < lay.q; ++j) {
      const int pr = pair_rank(i, j, lay.q);
      int chosen = -1;
      for (int e : lay.pair_edges[pr]) {
        const auto [u, v] = g.edges[e];
        if ((u == by_color[i] && v == by_color[j]) || (u == by_color[j] && v == by_color[i]))
          chosen = e;
      }
      if (chosen < 0) throw Error(ErrorCode::NotAClique, "selected vertices are not adjacent");
      alloc.owner_of[lay.t_item[pr]] = lay.edge_agent[chosen];
    }
  return alloc;
}

std::vector<int> extract_clique(const ColoredGraph& g, const Instance& inst,
                                const Allocation& alloc) {
  const McqLayout lay = mcq_layout(g);
  if (static_cast<int>(alloc.owner_of.size()) != inst.m() || inst.m() <= lay.s_item[0])
    throw Error(ErrorCode::InternalInvariantViolation, "allocation does not fit the gadget");

  std::vector<int> clique;
  for (int c = 0; c < lay.q; ++c) {
    const int agent = alloc.owner_of[lay.s_item[c]];
    if (agent < 0 || agent >= g.num_vertices || g.color_of[agent] != c)
      throw Error(ErrorCode::InternalInvariantViolation,
                  "per-color open item left its vertex group");
    clique.push_back(agent);  // vertex agents are indexed by vertex
  }
  for (int i = 0; i < lay.q; ++i)
    for (int j = i + 1; j < lay.q; ++j)
      if (!g.adjacent(clique[i], clique[j]))
        throw Error(ErrorCode::InternalInvariantViolation, "selected vertices not adjacent");
  return clique;
}

Instance is_to_refae(const Graph& g, int ell, bool as_fefae) {
  if (ell < 1 || ell > g.num_vertices)
    throw Error(ErrorCode::BadParams, "independent-set size out of range");
  const int ne = static_cast<int>(g.edges.size());
  const int nv = g.num_vertices;
  const int n = ne + 2;
  const int collector = ne;
  const int dump = ne + 1;
  // The collector's nominal own-item value |V| - 2l can be negative; shifting
  // every pre-assigned item in its row by the same constant keeps all of its
  // envy comparisons intact (each bundle holds exactly one such item).
  const Value shift = std::max<Value>(0, 2 * static_cast<Value>(ell) - nv);

  Instance inst;
  for (int e = 0; e < ne; ++e)
    inst.agent_ids.push_back("edge" + std::to_string(e + 1));
  inst.agent_ids.push_back("collector");
  inst.agent_ids.push_back("dump");
  for (int i = 0; i < n; ++i) inst.item_ids.push_back("g" + std::to_string(i + 1));
  for (int v = 0; v < nv; ++v) inst.item_ids.push_back("a" + std::to_string(v + 1));

  inst.valuations.assign(n, std::vector<Value>(n + nv, 0));
  for (int e = 0; e < ne; ++e) {
    auto& row = inst.valuations[e];
    row[e] = nv;
    row[collector] = nv - 1;
    row[dump] = 0;
    row[n + g.edges[e].first] = 1;
    row[n + g.edges[e].second] = 1;
  }
  {
    auto& row = inst.valuations[collector];
    for (int i = 0; i < n; ++i) row[i] = shift;
    row[collector] = nv - 2 * static_cast<Value>(ell) + shift;
    for (int v = 0; v < nv; ++v) row[n + v] = 1;
  }
  {
    auto& row = inst.valuations[dump];
    for (int e = 0; e < ne; ++e) row[e] = 2 * static_cast<Value>(nv) - ell;
    row[collector] = 0;
    row[dump] = nv;
    for (int v = 0; v < nv; ++v) row[n + v] = 1;
  }

  inst.owner_of.assign(n + nv, Instance::kOpen);
  for (int i = 0; i < n; ++i) inst.owner_of[i] = i;
  inst.query = as_fefae ? Query::fefae(2) : Query::refae({collector, dump});
  return validate_instance(std::move(inst));
}

std::vector<int> extract_independent_set(const Instance& inst, const Allocation& alloc) {
  const std::vector<int> opens = inst.open_items();
  const int nv = static_cast<int>(opens.size());
  const int n = inst.n();
  const int collector = n - 2;
  const int dump = n - 1;
  if (n < 2 || static_cast<int>(alloc.owner_of.size()) != inst.m())
    throw Error(ErrorCode::InternalInvariantViolation, "allocation does not fit the gadget");

  std::vector<int> picked;
  for (int v = 0; v < nv; ++v)
    if (alloc.owner_of[opens[v]] == collector) picked.push_back(v);

  const int ne = n - 2;
  if (ne > 0) {
    // l is recoverable from the dump agent's valuation of any edge item.
    const Value ell = 2 * static_cast<Value>(nv) - inst.value(dump, 0);
    if (static_cast<Value>(picked.size()) != ell)
      throw Error(ErrorCode::InternalInvariantViolation,
                  "collector did not receive exactly the target number of items");
    for (int e = 0; e < ne; ++e) {
      int hits = 0;
      for (int v : picked) hits += inst.value(e, opens[v]) == 1;
      if (hits >= 2)
        throw Error(ErrorCode::InternalInvariantViolation, "selected vertices share an edge");
    }
  }
  return picked;
}

}  // namespace efae
