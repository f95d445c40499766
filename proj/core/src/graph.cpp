#include "rtd/graph.hpp"

#include <algorithm>
#include <string>

#include "rtd/errors.hpp"

namespace rtd {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw ArgumentError("vertex count " + std::to_string(n) +
                        " outside [0, " + std::to_string(kMaxVertices) + "]");
  }
  rows_.assign(n, VertexSet(n));
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw ArgumentError("vertex " + std::to_string(v) + " out of range for n=" +
                        std::to_string(n_));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
  rows_[u].insert(v);
  rows_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u].erase(v);
  rows_[v].erase(u);
}

int Graph::min_degree() const {
  if (n_ == 0) throw ArgumentError("min_degree of the empty graph");
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  if (n_ == 0) throw ArgumentError("max_degree of the empty graph");
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::int64_t Graph::edge_count() const {
  std::int64_t twice = 0;
  for (const auto& row : rows_) twice += row.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = rows_[u].next(u); v >= 0; v = rows_[u].next(v))
      out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::complement() const {
  Graph c(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) c.add_edge(u, v);
  return c;
}

Graph Graph::induced(std::span<const int> vertices) const {
  const int k = static_cast<int>(vertices.size());
  Graph h(k);
  for (int i = 0; i < k; ++i) {
    check_vertex(vertices[i]);
    for (int j = i + 1; j < k; ++j)
      if (has_edge(vertices[i], vertices[j])) h.add_edge(i, j);
  }
  return h;
}

bool Graph::valid() const {
  if (static_cast<int>(rows_.size()) != n_) return false;
  for (int u = 0; u < n_; ++u) {
    if (rows_[u].universe() != n_ || rows_[u].contains(u)) return false;
    bool ok = true;
    rows_[u].for_each([&](int v) {
      if (v >= n_ || !rows_[v].contains(u)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace rtd
