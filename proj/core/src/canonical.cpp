#include "rtd/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "rtd/errors.hpp"

namespace rtd {

namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxCanonicalVertices)
    throw ArgumentError("canonical forms support n <= " +
                        std::to_string(kMaxCanonicalVertices) + ", got " +
                        std::to_string(n));
}

std::uint64_t code_under(const Graph& g, const std::vector<int>& label_to_vertex) {
  const int n = g.n();
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      code = (code << 1) |
             (g.has_edge(label_to_vertex[i], label_to_vertex[j]) ? 1u : 0u);
  return code;
}

// Iterated degree refinement; returns the cells in canonical order.
std::vector<std::vector<int>> refine(const Graph& g) {
  const int n = g.n();
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<int> around;
      g.neighbors(v).for_each([&](int u) { around.push_back(colour[u]); });
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, id] : rank) id = r++;
    for (int v = 0; v < n; ++v) colour[v] = rank[sig[v]];
    if (r == classes) break;
    classes = r;
  }
  std::vector<std::vector<int>> cells(classes);
  for (int v = 0; v < n; ++v) cells[colour[v]].push_back(v);
  return cells;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  check_size(g.n());
  std::vector<int> id(g.n());
  for (int i = 0; i < g.n(); ++i) id[i] = i;
  return code_under(g, id);
}

Graph graph_from_code(int n, std::uint64_t code) {
  check_size(n);
  Graph g(n);
  int bit = n * (n - 1) / 2 - 1;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, --bit)
      if ((code >> bit) & 1u) g.add_edge(i, j);
  return g;
}

std::uint64_t canonical_code(const Graph& g) {
  check_size(g.n());
  if (g.n() <= 1) return 0;
  auto cells = refine(g);
  std::uint64_t best = ~std::uint64_t{0};
  // Odometer over the permutations of every cell.
  while (true) {
    std::vector<int> labels;
    labels.reserve(g.n());
    for (const auto& c : cells) labels.insert(labels.end(), c.begin(), c.end());
    best = std::min(best, code_under(g, labels));
    std::size_t k = 0;
    for (; k < cells.size(); ++k)
      if (std::next_permutation(cells[k].begin(), cells[k].end())) break;
    if (k == cells.size()) break;
  }
  return best;
}

CanonicalLevels::CanonicalLevels(int n) : n_(n) {
  check_size(n);
  if (n < 1) throw ArgumentError("graph enumeration needs n >= 1");
  codes_.push_back(canonical_code(Graph::complete(n)));
  ++canonicalizations_;
}

bool CanonicalLevels::advance() {
  const int pairs = n_ * (n_ - 1) / 2;
  if (level_ >= pairs) return false;
  std::set<std::uint64_t> next;
  for (auto code : codes_) {
    Graph g = graph_from_code(n_, code);
    for (auto [u, v] : g.edges()) {
      g.remove_edge(u, v);
      next.insert(canonical_code(g));
      ++canonicalizations_;
      g.add_edge(u, v);
    }
  }
  codes_.assign(next.begin(), next.end());
  ++level_;
  return true;
}

std::vector<Graph> all_graphs_up_to_isomorphism(int n) {
  CanonicalLevels levels(n);
  std::vector<Graph> out;
  do {
    for (auto code : levels.codes()) out.push_back(graph_from_code(n, code));
  } while (levels.advance());
  return out;
}

}  // namespace rtd
