#include "rtd/rt_search.hpp"

#include <algorithm>
#include <string>

#include "rtd/canonical.hpp"
#include "rtd/clique.hpp"
#include "rtd/errors.hpp"

namespace rtd {

namespace {

class ColoringBacktrack {
 public:
  ColoringBacktrack(const Graph& g, int p, int q, std::int64_t budget)
      : g_(g), limits_{p, q}, budget_(budget), classes_{Graph(g.n()), Graph(g.n())} {
    edges_ = g.edges();
    std::stable_sort(edges_.begin(), edges_.end(), [&](auto a, auto b) {
      return g.degree(a.first) + g.degree(a.second) >
             g.degree(b.first) + g.degree(b.second);
    });
    colours_.assign(edges_.size(), 0);
  }

  ColoringSearch run() {
    ColoringSearch out;
    const bool ok = extend(0);
    out.nodes = nodes_;
    out.exhausted = !budget_hit_;
    if (ok) {
      EdgeColoring c;
      for (std::size_t i = 0; i < edges_.size(); ++i)
        c.push_back({edges_[i].first, edges_[i].second, colours_[i]});
      std::sort(c.begin(), c.end());
      out.coloring = std::move(c);
      out.exhausted = true;
    }
    return out;
  }

 private:
  // Would colouring {u,v} with `colour` complete a monochromatic clique?
  bool closes_clique(int colour, int u, int v) const {
    const int s = limits_[colour - 1];
    if (s <= 2) return true;
    const Graph& cls = classes_[colour - 1];
    const VertexSet common = cls.neighbors(u) & cls.neighbors(v);
    if (common.size() < s - 2) return false;
    return find_clique_within(cls, common, s - 2).has_value();
  }

  bool extend(std::size_t idx) {
    if (idx == edges_.size()) return true;
    const auto [u, v] = edges_[idx];
    for (int colour = 1; colour <= 2; ++colour) {
      if (++nodes_ > budget_) {
        budget_hit_ = true;
        return false;
      }
      if (closes_clique(colour, u, v)) continue;
      classes_[colour - 1].add_edge(u, v);
      colours_[idx] = colour;
      if (extend(idx + 1)) return true;
      classes_[colour - 1].remove_edge(u, v);
      if (budget_hit_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::array<int, 2> limits_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  bool budget_hit_ = false;
  std::array<Graph, 2> classes_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> colours_;
};

}  // namespace

ColoringSearch find_free_coloring(const Graph& g, int p, int q,
                                  std::int64_t budget) {
  if (p < 2 || q < 2) throw ArgumentError("clique sizes must be >= 2");
  if (budget <= 0) throw ArgumentError("search budget must be positive");
  return ColoringBacktrack(g, p, q, budget).run();
}

RtResult rt_exact(const RtInstance& inst) {
  if (inst.n < 1) throw ArgumentError("rt_exact needs n >= 1");
  if (inst.p < 2 || inst.q < 2) throw ArgumentError("clique sizes must be >= 2");
  if (inst.m < 1) throw ArgumentError("independence cap must be >= 1");
  if (inst.budget <= 0) throw ArgumentError("search budget must be positive");
  if (inst.n > kMaxCanonicalVertices)
    throw ArgumentError("rt_exact supports n <= " +
                        std::to_string(kMaxCanonicalVertices));

  RtResult result;
  const std::int64_t pairs = std::int64_t{inst.n} * (inst.n - 1) / 2;
  CanonicalLevels levels(inst.n);
  do {
    for (auto code : levels.codes()) {
      const std::int64_t spent = result.nodes + result.graphs_examined;
      if (spent >= inst.budget) return result;  // inconclusive
      ++result.graphs_examined;
      const Graph g = graph_from_code(inst.n, code);
      if (independence_number(g).size > inst.m) continue;
      const auto search =
          find_free_coloring(g, inst.p, inst.q, inst.budget - spent);
      result.nodes += search.nodes;
      if (!search.exhausted) return result;
      if (search.coloring) {
        result.value = pairs - levels.level();
        result.witness = ColoredGraph::from(g, *search.coloring);
        result.exhausted = true;
        return result;
      }
    }
  } while (levels.advance());
  result.exhausted = true;
  return result;
}

bool ramsey_verify(int p, int q, int n, std::int64_t budget) {
  if (n < 1) throw ArgumentError("ramsey_verify needs n >= 1");
  const auto search = find_free_coloring(Graph::complete(n), p, q, budget);
  if (!search.exhausted)
    throw BudgetExhausted("ramsey_verify(" + std::to_string(p) + "," +
                          std::to_string(q) + "," + std::to_string(n) +
                          ") ran out of budget after " +
                          std::to_string(search.nodes) + " nodes");
  return search.coloring.has_value();
}

}  // namespace rtd
