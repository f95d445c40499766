#include "rtd/partition.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "rtd/errors.hpp"

namespace rtd {

VertexPartition::VertexPartition(int n, std::vector<std::vector<int>> parts,
                                 bool allow_empty)
    : n_(n), parts_(std::move(parts)), owner_(n, -1) {
  for (int i = 0; i < size(); ++i) {
    auto& p = parts_[i];
    if (p.empty() && !allow_empty)
      throw ArgumentError("part " + std::to_string(i) + " is empty");
    std::sort(p.begin(), p.end());
    VertexSet s(n);
    for (int v : p) {
      if (v < 0 || v >= n)
        throw ArgumentError("vertex " + std::to_string(v) + " out of range");
      if (owner_[v] >= 0)
        throw ArgumentError("vertex " + std::to_string(v) +
                            " appears in two parts");
      owner_[v] = i;
      s.insert(v);
    }
    sets_.push_back(std::move(s));
  }
  for (int v = 0; v < n; ++v)
    if (owner_[v] < 0)
      throw ArgumentError("vertex " + std::to_string(v) + " is not covered");
}

VertexPartition VertexPartition::blocks(std::span<const int> sizes) {
  std::vector<std::vector<int>> parts;
  int next = 0;
  for (int s : sizes) {
    std::vector<int> part(s);
    for (int i = 0; i < s; ++i) part[i] = next++;
    parts.push_back(std::move(part));
  }
  return VertexPartition(next, std::move(parts));
}

int min_crossing_degree(const Graph& g, const VertexPartition& part) {
  if (part.n() != g.n())
    throw ArgumentError("partition does not cover the graph");
  if (part.size() < 2)
    throw ArgumentError("crossing degree needs at least two parts");
  int best = std::numeric_limits<int>::max();
  for (int i = 0; i < part.size(); ++i)
    for (int v : part.part(i))
      for (int j = 0; j < part.size(); ++j)
        if (j != i) best = std::min(best, g.degree_into(v, part.part_set(j)));
  return best;
}

std::int64_t cut_size(const Graph& g, const VertexPartition& part) {
  std::int64_t cut = 0;
  for (auto [u, v] : g.edges())
    if (part.part_of(u) != part.part_of(v)) ++cut;
  return cut;
}

VertexPartition max_cut_partition(const Graph& g, int p, std::uint64_t seed) {
  const int n = g.n();
  if (p < 2) throw ArgumentError("max-cut partition needs p >= 2");
  if (p > n)
    throw ArgumentError("part count " + std::to_string(p) +
                        " exceeds vertex count " + std::to_string(n));

  // Seeded Fisher-Yates so the start does not depend on the standard
  // library's shuffle.
  std::mt19937_64 rng(seed);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  std::vector<int> owner(n);
  for (int i = 0; i < n; ++i) owner[perm[i]] = i % p;

  // deg_to[v][j] = neighbours of v in part j
  std::vector<std::vector<int>> deg_to(n, std::vector<int>(p, 0));
  for (auto [u, v] : g.edges()) {
    ++deg_to[u][owner[v]];
    ++deg_to[v][owner[u]];
  }

  auto move = [&](int v, int to) {
    const int from = owner[v];
    g.neighbors(v).for_each([&](int u) {
      --deg_to[u][from];
      ++deg_to[u][to];
    });
    owner[v] = to;
  };
  auto gain = [&](int v, int to) { return deg_to[v][owner[v]] - deg_to[v][to]; };

  // Best single-vertex move first; when none improves, try exchanging two
  // vertices of different parts.
  while (true) {
    int best_gain = 0;
    int best_v = -1;
    int best_j = -1;
    for (int v = 0; v < n; ++v) {
      for (int j = 0; j < p; ++j) {
        if (j == owner[v]) continue;
        if (gain(v, j) > best_gain) {
          best_gain = gain(v, j);
          best_v = v;
          best_j = j;
        }
      }
    }
    if (best_v >= 0) {
      move(best_v, best_j);
      continue;
    }
    int swap_u = -1;
    int swap_v = -1;
    for (int u = 0; u < n && swap_u < 0; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (owner[u] == owner[v]) continue;
        const int both = gain(u, owner[v]) + gain(v, owner[u]) +
                         (g.has_edge(u, v) ? 2 : 0);
        if (both > 0) {
          swap_u = u;
          swap_v = v;
          break;
        }
      }
    if (swap_u < 0) break;
    const int part_u = owner[swap_u];
    move(swap_u, owner[swap_v]);
    move(swap_v, part_u);
  }

  std::vector<std::vector<int>> parts(p);
  for (int v = 0; v < n; ++v) parts[owner[v]].push_back(v);
  return VertexPartition(n, std::move(parts), /*allow_empty=*/true);
}

Subgraph min_degree_refinement(const Graph& g, const Rational& d) {
  if (d <= 0 || d > 1)
    throw ArgumentError("degree fraction must lie in (0, 1]");
  const int n = g.n();
  VertexSet alive = VertexSet::full(n);
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  int count = n;

  const auto num = boost::multiprecision::numerator(d);
  const auto den = boost::multiprecision::denominator(d);
  // degree < d * count  <=>  degree * den < num * count
  auto violates = [&](int v) { return degree[v] * den < num * count; };

  // Each round removes every vertex violating the bound for the current
  // vertex count at once.
  while (count > 0) {
    VertexSet doomed(n);
    alive.for_each([&](int v) {
      if (violates(v)) doomed.insert(v);
    });
    if (doomed.empty()) break;
    alive -= doomed;
    count = alive.size();
    doomed.for_each([&](int v) {
      (g.neighbors(v) & alive).for_each([&](int u) { --degree[u]; });
    });
  }

  Subgraph out;
  out.vertices = alive.to_vector();
  out.graph = g.induced(out.vertices);
  return out;
}

}  // namespace rtd
