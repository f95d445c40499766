#pragma once

#include <array>
#include <vector>

#include "rtd/graph.hpp"

namespace rtd {

struct ColoredEdge {
  int u = 0;
  int v = 0;
  int color = 1;  // 1 or 2
  auto operator<=>(const ColoredEdge&) const = default;
};

// Total colouring of a host graph's edge set, sorted by (u, v) with u < v.
using EdgeColoring = std::vector<ColoredEdge>;

// Graph with every edge coloured 1 or 2. The colour classes G1 and G2 are
// spanning subgraphs that partition the edge set of the underlying graph.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  explicit ColoredGraph(int n);

  // Throws ArgumentError unless `coloring` covers exactly g's edge set.
  static ColoredGraph from(const Graph& g, const EdgeColoring& coloring);
  // Every edge of g gets `color`.
  static ColoredGraph monochromatic(const Graph& g, int color);

  int n() const { return underlying_.n(); }

  // Adds the edge if missing; recolours it otherwise.
  void set_edge(int u, int v, int color);
  // 0 when {u, v} is not an edge.
  int color(int u, int v) const;

  const Graph& underlying() const { return underlying_; }
  const Graph& color_class(int color) const { return classes_[color - 1]; }

  EdgeColoring coloring() const;

  bool operator==(const ColoredGraph&) const = default;

 private:
  Graph underlying_;
  std::array<Graph, 2> classes_;
};

}  // namespace rtd
