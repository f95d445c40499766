#pragma once

// Brute-force reference implementations used to cross-check the solvers.

#include <cstdint>
#include <random>
#include <vector>

#include "rtd/colored_graph.hpp"
#include "rtd/graph.hpp"

namespace rtd::testing {

// Subset enumeration over bitmasks; n <= 20.
inline bool mask_is_clique(const Graph& g, std::uint32_t mask) {
  for (int u = 0; u < g.n(); ++u) {
    if (!((mask >> u) & 1)) continue;
    for (int v = u + 1; v < g.n(); ++v)
      if (((mask >> v) & 1) && !g.has_edge(u, v)) return false;
  }
  return true;
}

inline bool naive_has_clique(const Graph& g, int p) {
  if (p == 0) return true;
  const std::uint32_t limit = 1u << g.n();
  for (std::uint32_t mask = 0; mask < limit; ++mask)
    if (__builtin_popcount(mask) == p && mask_is_clique(g, mask)) return true;
  return false;
}

inline int naive_clique_number(const Graph& g) {
  int best = 0;
  const std::uint32_t limit = 1u << g.n();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const int size = __builtin_popcount(mask);
    if (size > best && mask_is_clique(g, mask)) best = size;
  }
  return best;
}

inline int naive_independence_number(const Graph& g) {
  return naive_clique_number(g.complement());
}

inline Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline ColoredGraph random_colored(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density), color(0.5);
  ColoredGraph cg(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) cg.set_edge(u, v, color(rng) ? 1 : 2);
  return cg;
}

// True iff some 2-colouring of g's edges has no colour-1 K_p and no colour-2 K_q.
inline bool naive_free_coloring_exists(const Graph& g, int p, int q) {
  const auto edges = g.edges();
  const std::uint64_t limit = 1ull << edges.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Graph c1(g.n()), c2(g.n());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      ((mask >> i) & 1 ? c2 : c1).add_edge(u, v);
    }
    if (!naive_has_clique(c1, p) && !naive_has_clique(c2, q)) return true;
  }
  return false;
}

}  // namespace rtd::testing
