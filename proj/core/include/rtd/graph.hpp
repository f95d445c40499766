#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rtd/vertex_set.hpp"

namespace rtd {

// Undirected simple graph on vertices [0, n) with one bitset row per vertex.
// Adjacency is kept symmetric and irreflexive by every mutator.
class Graph {
 public:
  static constexpr int kMaxVertices = 4096;

  Graph() = default;
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph petersen();
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int n() const { return n_; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const { return rows_[u].contains(v); }

  const VertexSet& neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return rows_[v].size(); }
  int degree_into(int v, const VertexSet& s) const {
    return rows_[v].count_common(s);
  }
  int min_degree() const;
  int max_degree() const;

  std::int64_t edge_count() const;
  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  Graph complement() const;
  // Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
  Graph induced(std::span<const int> vertices) const;

  // True iff the symmetry, irreflexivity and range invariants hold.
  bool valid() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> rows_;
};

}  // namespace rtd
