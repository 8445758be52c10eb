#include "efae/graphs.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace efae {
namespace {

struct RawGraph {
  int n = 0;
  int m = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> colors;  // (vertex, color), 1-based
};

RawGraph parse_raw(const std::string& text, bool allow_colors) {
  RawGraph raw;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::MalformedGraph,
                  "line " + std::to_string(line_no) + ": " + why);
    };
    if (tag == "p") {
      if (have_header) fail("duplicate header");
      if (!(ls >> raw.n >> raw.m) || raw.n < 1 || raw.m < 0) fail("bad header");
      have_header = true;
    } else if (tag == "e") {
      int u, v;
      if (!have_header) fail("edge before header");
      if (!(ls >> u >> v)) fail("bad edge line");
      raw.edges.emplace_back(u, v);
    } else if (tag == "c" && allow_colors) {
      int v, color;
      if (!have_header) fail("color before header");
      if (!(ls >> v >> color)) fail("bad color line");
      raw.colors.emplace_back(v, color);
    } else {
      fail("unknown record '" + tag + "'");
    }
  }
  if (!have_header) throw Error(ErrorCode::MalformedGraph, "missing header");
  if (static_cast<int>(raw.edges.size()) != raw.m)
    throw Error(ErrorCode::MalformedGraph, "edge count does not match header");
  return raw;
}

std::vector<std::pair<int, int>> check_edges(const RawGraph& raw) {
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : raw.edges) {
    if (u < 1 || u > raw.n || v < 1 || v > raw.n)
      throw Error(ErrorCode::MalformedGraph, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::MalformedGraph, "self-loop");
    const auto key = std::minmax(u, v);
    if (!seen.insert(key).second) throw Error(ErrorCode::MalformedGraph, "duplicate edge");
    edges.emplace_back(u - 1, v - 1);
  }
  return edges;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  const RawGraph raw = parse_raw(text, /*allow_colors=*/false);
  Graph g;
  g.num_vertices = raw.n;
  g.edges = check_edges(raw);
  return g;
}

ColoredGraph parse_colored_graph(const std::string& text) {
  const RawGraph raw = parse_raw(text, /*allow_colors=*/true);
  ColoredGraph g;
  g.num_vertices = raw.n;
  g.color_of.assign(raw.n, -1);
  for (auto [v, color] : raw.colors) {
    if (v < 1 || v > raw.n) throw Error(ErrorCode::MalformedGraph, "colored vertex out of range");
    if (color < 1) throw Error(ErrorCode::MalformedGraph, "colors are 1-based");
    if (g.color_of[v - 1] != -1) throw Error(ErrorCode::MalformedGraph, "vertex colored twice");
    g.color_of[v - 1] = color - 1;
    g.num_colors = std::max(g.num_colors, color);
  }
  for (int v = 0; v < raw.n; ++v)
    if (g.color_of[v] == -1)
      throw Error(ErrorCode::MalformedGraph, "vertex " + std::to_string(v + 1) + " has no color");
  std::vector<int> class_size(g.num_colors, 0);
  for (int v = 0; v < raw.n; ++v) ++class_size[g.color_of[v]];
  for (int c = 0; c < g.num_colors; ++c)
    if (class_size[c] == 0)
      throw Error(ErrorCode::MalformedGraph, "color " + std::to_string(c + 1) + " unused");
  g.edges = check_edges(raw);
  for (auto [u, v] : g.edges)
    if (g.color_of[u] == g.color_of[v])
      throw Error(ErrorCode::MalformedGraph, "edge within one color class");
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.num_vertices << " " << g.edges.size() << "\n";
  for (auto [u, v] : g.edges) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

std::string format_colored_graph(const ColoredGraph& g) {
  std::ostringstream out;
  out << "p " << g.num_vertices << " " << g.edges.size() << "\n";
  for (int v = 0; v < g.num_vertices; ++v) out << "c " << v + 1 << " " << g.color_of[v] + 1 << "\n";
  for (auto [u, v] : g.edges) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

}  // namespace efae
