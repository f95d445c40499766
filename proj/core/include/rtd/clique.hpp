#pragma once

#include <optional>
#include <vector>

#include "rtd/graph.hpp"
#include "rtd/vertex_set.hpp"

namespace rtd {

// Exact clique / independent-set search: branch and bound over bitset rows
// with a greedy-colouring upper bound (colour classes built from the lowest
// remaining vertex index, so witnesses are deterministic).

struct CliqueResult {
  int size = 0;
  std::vector<int> vertices;  // sorted ascending
};

// A clique of exactly `p` vertices, or nullopt. Requires 1 <= p <= n.
std::optional<std::vector<int>> find_clique(const Graph& g, int p);

// Same, restricted to vertices in `within`; p >= 1, no upper limit.
std::optional<std::vector<int>> find_clique_within(const Graph& g,
                                                   const VertexSet& within,
                                                   int p);

// Maximum clique. Requires n >= 1.
CliqueResult max_clique(const Graph& g);
CliqueResult max_clique_within(const Graph& g, const VertexSet& within);

// alpha(g) with a witness independent set. Requires n >= 1.
CliqueResult independence_number(const Graph& g);
// alpha(g[within]); an empty `within` yields size 0.
CliqueResult independence_number_within(const Graph& g,
                                        const VertexSet& within);

bool is_clique(const Graph& g, const std::vector<int>& vertices);
bool is_independent(const Graph& g, const std::vector<int>& vertices);

}  // namespace rtd
