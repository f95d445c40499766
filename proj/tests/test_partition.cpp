#include <gtest/gtest.h>

#include <random>

#include "rtd/constructions.hpp"
#include "rtd/errors.hpp"
#include "rtd/partition.hpp"
#include "support/oracles.hpp"

namespace rtd {
namespace {

TEST(VertexPartition, Validation) {
  EXPECT_THROW(VertexPartition(3, {{0, 1}}), ArgumentError);           // missing 2
  EXPECT_THROW(VertexPartition(3, {{0, 1}, {1, 2}}), ArgumentError);   // overlap
  EXPECT_THROW(VertexPartition(2, {{0, 1}, {}}), ArgumentError);       // empty part
  EXPECT_NO_THROW(VertexPartition(2, {{0, 1}, {}}, true));
  const std::vector<int> sizes{2, 3};
  const auto b = VertexPartition::blocks(sizes);
  EXPECT_EQ(b.part(1), (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(b.part_of(4), 1);
}

TEST(MinCrossingDegree, Examples) {
  EXPECT_EQ(min_crossing_degree(turan(12, 6), turan_partition(12, 6)), 2);
  EXPECT_EQ(min_crossing_degree(Graph::cycle(5),
                                VertexPartition(5, {{0, 1}, {2, 3, 4}})),
            0);
  EXPECT_EQ(min_crossing_degree(Graph::complete(6),
                                VertexPartition(6, {{0, 1, 2}, {3, 4, 5}})),
            3);
  EXPECT_THROW(min_crossing_degree(Graph::complete(3),
                                   VertexPartition(3, {{0, 1, 2}})),
               ArgumentError);
}

TEST(MaxCut, Examples) {
  const auto c4 = max_cut_partition(Graph::cycle(4), 2, 0);
  EXPECT_EQ(cut_size(Graph::cycle(4), c4), 4);
  const auto k3 = max_cut_partition(Graph::complete(3), 3, 0);
  EXPECT_EQ(cut_size(Graph::complete(3), k3), 3);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(k3.part(i).size(), 1u);
  EXPECT_EQ(cut_size(Graph(4), max_cut_partition(Graph(4), 2, 0)), 0);
  EXPECT_THROW(max_cut_partition(Graph(3), 4, 0), ArgumentError);
}

TEST(MaxCut, C4EveryLocalOptimumIsGlobal) {
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    EXPECT_EQ(cut_size(Graph::cycle(4), max_cut_partition(Graph::cycle(4), 2, seed)), 4);
}

// No single-vertex move increases the cut.
TEST(MaxCut, OutputIsOneMoveLocalOptimum) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 20);
    const int p = 2 + static_cast<int>(rng() % 4);
    const Graph g = testing::random_graph(n, 0.5, rng);
    const auto part = max_cut_partition(g, p, rng());
    const auto base = cut_size(g, part);
    for (int v = 0; v < n; ++v) {
      for (int j = 0; j < p; ++j) {
        if (j == part.part_of(v)) continue;
        std::vector<std::vector<int>> parts = part.parts();
        auto& from = parts[part.part_of(v)];
        from.erase(std::find(from.begin(), from.end(), v));
        parts[j].push_back(v);
        std::sort(parts[j].begin(), parts[j].end());
        const VertexPartition moved(n, parts, true);
        ASSERT_LE(cut_size(g, moved), base);
      }
    }
  }
}

TEST(MinDegreeRefinement, Examples) {
  Graph k4p(5);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4p.add_edge(u, v);
  k4p.add_edge(3, 4);
  EXPECT_EQ(min_degree_refinement(k4p, Rational(1, 2)).vertices,
            (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(min_degree_refinement(Graph::cycle(5), Rational(2, 5)).vertices,
            (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(min_degree_refinement(Graph::cycle(5), Rational(1, 2)).vertices.empty());
}

TEST(MinDegreeRefinement, ResultIsFixedPoint) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(20, 0.3, rng);
    const Rational d(1 + static_cast<int>(rng() % 5), 10);
    const auto sub = min_degree_refinement(g, d);
    const int n2 = static_cast<int>(sub.vertices.size());
    ASSERT_EQ(sub.graph.n(), n2);
    for (int v = 0; v < n2; ++v) ASSERT_GE(Rational(sub.graph.degree(v)), d * n2);
    for (int i = 0; i < n2; ++i)
      for (int j = i + 1; j < n2; ++j)
        ASSERT_EQ(sub.graph.has_edge(i, j), g.has_edge(sub.vertices[i], sub.vertices[j]));
  }
}

}  // namespace
}  // namespace rtd
