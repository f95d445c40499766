#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rtd/graph.hpp"
#include "rtd/rational.hpp"
#include "rtd/vertex_set.hpp"

namespace rtd {

// Ordered list of disjoint vertex sets covering [0, n).
class VertexPartition {
 public:
  VertexPartition() = default;
  // Validates disjointness and coverage; empty parts are rejected unless
  // `allow_empty` is set.
  VertexPartition(int n, std::vector<std::vector<int>> parts,
                  bool allow_empty = false);

  // Consecutive blocks of the given sizes: [0,s0), [s0,s0+s1), ...
  static VertexPartition blocks(std::span<const int> sizes);

  int n() const { return n_; }
  int size() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& part(int i) const { return parts_[i]; }
  const std::vector<std::vector<int>>& parts() const { return parts_; }
  const VertexSet& part_set(int i) const { return sets_[i]; }
  int part_of(int v) const { return owner_[v]; }

  bool operator==(const VertexPartition& o) const { return parts_ == o.parts_; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> parts_;
  std::vector<VertexSet> sets_;
  std::vector<int> owner_;
};

// min over i != j and v in part i of deg(v, part j). Needs >= 2 parts.
int min_crossing_degree(const Graph& g, const VertexPartition& part);

// Number of edges whose endpoints lie in different parts.
std::int64_t cut_size(const Graph& g, const VertexPartition& part);

// 1-move locally optimal p-partition: from a seeded balanced random start,
// repeatedly applies the single-vertex move with the largest positive gain
// (ties to the lowest vertex index, then the lowest target part) until no
// move increases the cut. Not a global maximum in general.
VertexPartition max_cut_partition(const Graph& g, int p, std::uint64_t seed);

struct Subgraph {
  std::vector<int> vertices;  // original labels, ascending
  Graph graph;                // induced on `vertices`
};

// Deletes, one at a time and lowest index first, any vertex whose degree in
// the current graph is below d * (current vertex count). Requires 0 < d <= 1.
// The result may be empty.
Subgraph min_degree_refinement(const Graph& g, const Rational& d);

}  // namespace rtd
