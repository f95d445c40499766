#pragma once

#include <cstdint>
#include <vector>

#include "rtd/graph.hpp"

namespace rtd {

// Canonical labelling for small graphs (n <= 11). The code packs the upper
// triangle in graph6 column order with x(0,1) as the most significant bit.
// The canonical code is the lexicographically smallest code over all
// relabellings compatible with an isomorphism-invariant refinement of the
// vertices by iterated degree signatures, so two graphs share a code iff
// they are isomorphic.
constexpr int kMaxCanonicalVertices = 11;

std::uint64_t adjacency_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);
std::uint64_t canonical_code(const Graph& g);

// Isomorphism classes of n-vertex graphs with exactly `removed` edges
// missing from K_n, as ascending canonical codes. Level 0 is {K_n}.
// Callers that walk levels in order should use CanonicalLevels instead.
class CanonicalLevels {
 public:
  explicit CanonicalLevels(int n);

  int n() const { return n_; }
  int level() const { return level_; }  // edges removed from K_n
  const std::vector<std::uint64_t>& codes() const { return codes_; }
  // Moves to the next level. Returns false past the edgeless graph.
  bool advance();
  std::int64_t canonicalizations() const { return canonicalizations_; }

 private:
  int n_;
  int level_ = 0;
  std::vector<std::uint64_t> codes_;
  std::int64_t canonicalizations_ = 0;
};

// Every isomorphism class on n vertices (all levels), ascending within a
// level, levels from densest to sparsest.
std::vector<Graph> all_graphs_up_to_isomorphism(int n);

}  // namespace rtd
