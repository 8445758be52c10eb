#pragma once

#include <string>
#include <utility>
#include <vector>

#include "efae/types.hpp"

namespace efae {

// Simple undirected graph; vertices are 0-based internally, 1-based in the
// text format ("p <n> <m>" header, one "e u v" line per edge).
struct Graph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // in input order

  bool adjacent(int u, int v) const {
    for (auto [a, b] : edges)
      if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
  }
};

// Vertex-colored variant; the text format adds one "c <v> <color>" line per
// vertex. Colors are 1-based in files, 0-based internally, and intra-color
// edges are rejected.
struct ColoredGraph {
  int num_vertices = 0;
  int num_colors = 0;
  std::vector<int> color_of;
  std::vector<std::pair<int, int>> edges;

  bool adjacent(int u, int v) const {
    for (auto [a, b] : edges)
      if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
  }

  std::vector<std::vector<int>> color_classes() const {
    std::vector<std::vector<int>> classes(num_colors);
    for (int v = 0; v < num_vertices; ++v) classes[color_of[v]].push_back(v);
    return classes;
  }
};

Graph parse_graph(const std::string& text);
ColoredGraph parse_colored_graph(const std::string& text);
std::string format_graph(const Graph& g);
std::string format_colored_graph(const ColoredGraph& g);

}  // namespace efae
