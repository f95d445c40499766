#pragma once

#include <cstdint>
#include <optional>

#include "rtd/colored_graph.hpp"
#include "rtd/graph.hpp"

namespace rtd {

struct ColoringSearch {
  std::optional<EdgeColoring> coloring;
  bool exhausted = false;  // true when the answer is conclusive
  std::int64_t nodes = 0;  // colour assignments tried
};

// Backtracking over edge colours. Edges are taken in order of decreasing
// degree sum (ties by (u, v)); colour 1 is tried first; an assignment is
// kept only if it closes no colour-1 K_p and no colour-2 K_q among the
// edges coloured so far. An empty result with exhausted = true proves that
// no (K_p, K_q)-free colouring exists. budget > 0 caps the node count.
ColoringSearch find_free_coloring(const Graph& g, int p, int q,
                                  std::int64_t budget = 10'000'000);

struct RtInstance {
  int n = 1;
  int p = 3;
  int q = 3;
  int m = 1;  // independence cap
  std::int64_t budget = 50'000'000;
};

struct RtResult {
  std::optional<std::int64_t> value;
  std::optional<ColoredGraph> witness;
  bool exhausted = false;  // search completed (value or proof of absence)
  std::int64_t graphs_examined = 0;
  std::int64_t nodes = 0;
};

// Exact RT(n, p, q, m): walks isomorphism classes from K_n downwards, one
// edge count at a time, and returns the first level containing a graph
// with alpha <= m and a (K_p, K_q)-free colouring. Within a level the
// lexicographically smallest canonical code wins. Supports n <= 11; only
// n <= 8 is practical to finish.
RtResult rt_exact(const RtInstance& inst);

// Does K_n admit a (K_p, K_q)-free colouring? Throws BudgetExhausted when
// the search is cut off before a conclusive answer.
bool ramsey_verify(int p, int q, int n, std::int64_t budget = 10'000'000);

}  // namespace rtd
