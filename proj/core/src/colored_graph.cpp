#include "rtd/colored_graph.hpp"

#include <string>

#include "rtd/errors.hpp"

namespace rtd {

ColoredGraph::ColoredGraph(int n)
    : underlying_(n), classes_{Graph(n), Graph(n)} {}

ColoredGraph ColoredGraph::from(const Graph& g, const EdgeColoring& coloring) {
  ColoredGraph cg(g.n());
  for (const auto& e : coloring) {
    if (e.u < 0 || e.v < 0 || e.u >= g.n() || e.v >= g.n() ||
        !g.has_edge(e.u, e.v)) {
      throw ArgumentError("coloured pair (" + std::to_string(e.u) + "," +
                          std::to_string(e.v) + ") is not an edge of the host");
    }
    if (cg.color(e.u, e.v) != 0) {
      throw ArgumentError("edge (" + std::to_string(e.u) + "," +
                          std::to_string(e.v) + ") coloured twice");
    }
    cg.set_edge(e.u, e.v, e.color);
  }
  if (cg.underlying_.edge_count() != g.edge_count())
    throw ArgumentError("colouring does not cover every edge of the host");
  return cg;
}

ColoredGraph ColoredGraph::monochromatic(const Graph& g, int color) {
  ColoredGraph cg(g.n());
  for (auto [u, v] : g.edges()) cg.set_edge(u, v, color);
  return cg;
}

void ColoredGraph::set_edge(int u, int v, int color) {
  if (color != 1 && color != 2)
    throw ArgumentError("edge colour must be 1 or 2, got " +
                        std::to_string(color));
  underlying_.add_edge(u, v);
  classes_[color - 1].add_edge(u, v);
  classes_[2 - color].remove_edge(u, v);
}

int ColoredGraph::color(int u, int v) const {
  if (classes_[0].has_edge(u, v)) return 1;
  if (classes_[1].has_edge(u, v)) return 2;
  return 0;
}

EdgeColoring ColoredGraph::coloring() const {
  EdgeColoring out;
  for (auto [u, v] : underlying_.edges()) out.push_back({u, v, color(u, v)});
  return out;
}

}  // namespace rtd
