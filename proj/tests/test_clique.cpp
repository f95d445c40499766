#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "rtd/canonical.hpp"
#include "rtd/clique.hpp"
#include "rtd/errors.hpp"
#include "support/oracles.hpp"

namespace rtd {
namespace {

TEST(FindClique, Examples) {
  EXPECT_EQ(find_clique(Graph::complete(6), 6), (std::vector<int>{0, 1, 2, 3, 4, 5}));
  EXPECT_FALSE(find_clique(Graph::cycle(5), 3).has_value());
  EXPECT_FALSE(find_clique(Graph::petersen(), 3).has_value());
}

TEST(FindClique, ArgumentErrors) {
  EXPECT_THROW(find_clique(Graph::complete(4), 0), ArgumentError);
  EXPECT_THROW(find_clique(Graph::complete(4), 5), ArgumentError);
}

TEST(IndependenceNumber, Examples) {
  const auto c5 = independence_number(Graph::cycle(5));
  EXPECT_EQ(c5.size, 2);
  EXPECT_TRUE(is_independent(Graph::cycle(5), c5.vertices));
  EXPECT_EQ(independence_number(Graph::complete(6)).size, 1);
  const auto pet = independence_number(Graph::petersen());
  EXPECT_EQ(pet.size, 4);
  EXPECT_EQ(pet.size, testing::naive_independence_number(Graph::petersen()));
  EXPECT_TRUE(is_independent(Graph::petersen(), pet.vertices));
  EXPECT_THROW(independence_number(Graph(0)), ArgumentError);
}

TEST(FindClique, AgreesWithSubsetEnumerationOnAllSmallGraphs) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : all_graphs_up_to_isomorphism(n)) {
      for (int p = 1; p <= n; ++p) {
        const auto found = find_clique(g, p);
        ASSERT_EQ(found.has_value(), testing::naive_has_clique(g, p))
            << "n=" << n << " p=" << p;
        if (found) {
          ASSERT_EQ(static_cast<int>(found->size()), p);
          ASSERT_TRUE(is_clique(g, *found));
        }
      }
    }
  }
}

TEST(IndependenceNumber, EqualsCliqueNumberOfComplement) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : all_graphs_up_to_isomorphism(n)) {
      const auto alpha = independence_number(g);
      ASSERT_EQ(alpha.size, max_clique(g.complement()).size);
      ASSERT_EQ(alpha.size, testing::naive_independence_number(g));
      ASSERT_TRUE(is_independent(g, alpha.vertices));
    }
  }
}

TEST(MaxClique, RandomGraphsAgreeWithOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Graph g = testing::random_graph(14, 0.6, rng);
    const auto mc = max_clique(g);
    ASSERT_EQ(mc.size, testing::naive_clique_number(g));
    ASSERT_TRUE(is_clique(g, mc.vertices));
  }
}

TEST(MaxClique, WithinRestrictsSearch) {
  const Graph k6 = Graph::complete(6);
  const VertexSet within(6, {1, 3, 5});
  const auto mc = max_clique_within(k6, within);
  EXPECT_EQ(mc.vertices, (std::vector<int>{1, 3, 5}));
  EXPECT_FALSE(find_clique_within(k6, within, 4).has_value());
}

TEST(Canonical, ClassCounts) {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n)
    EXPECT_EQ(all_graphs_up_to_isomorphism(n).size(), expected[n]) << n;
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = testing::random_graph(n, 0.5, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(n);
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    ASSERT_EQ(canonical_code(g), canonical_code(h));
  }
}

TEST(Canonical, CodeRoundTrip) {
  const Graph p = Graph::petersen();
  EXPECT_EQ(graph_from_code(10, adjacency_code(p)), p);
}

}  // namespace
}  // namespace rtd
