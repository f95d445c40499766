#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rtd/certificate.hpp"
#include "rtd/colored_graph.hpp"
#include "rtd/rational.hpp"

namespace rtd {

// Pass iff the colour-1 class is K_p-free and the colour-2 class is K_q-free.
// On failure the witness is the monochromatic clique found. p, q >= 2.
Certificate check_colored_free(const ColoredGraph& cg, int p, int q);

// check_colored_free plus alpha(underlying) <= m. Reports e(G), alpha(G)
// and e/n^2. On an alpha failure the witness is a maximum independent set.
Certificate check_rt_witness(const ColoredGraph& cg, int p, int q, int m);

enum class EdgeFormula {
  kKkl36,  // 5/12 + delta/2 + 2 delta^2
  kC37,    // 7/16 + delta/2
};
EdgeFormula parse_edge_formula(const std::string& id);  // kkl36 | c37
std::string to_string(EdgeFormula f);
Rational edge_formula_coefficient(EdgeFormula f, const Rational& delta);

// Pass iff |e(G) - coefficient(delta) * n^2| <= tol * n^2. tol > 0.
Certificate edge_formula_check(const ColoredGraph& cg, EdgeFormula formula,
                               const Rational& delta, const Rational& tol);

struct CensusResult {
  int colorings = 0;         // 2^C(n,2)
  int survivors = 0;         // colourings without a monochromatic triangle
  bool all_pentagonlike = true;  // every survivor has both classes = C5
};

// Sweeps all 2-colourings of E(K_n) for n <= 6. For n = 5 the survivors
// must all be pentagonlike; for n = 6 there are none.
CensusResult monochromatic_triangle_census(int n);
inline CensusResult pentagonlike_census() {
  return monochromatic_triangle_census(5);
}

struct Bipartition {
  std::vector<int> first;   // V1: alpha(G1[V1]) <= bound
  std::vector<int> second;  // V2: alpha(G2[V2]) <= bound
  int alpha_first = 0;
  int alpha_second = 0;
  int bound = 0;
};

struct BipartitionSearch {
  std::optional<Bipartition> found;
  int bound = 0;                  // ceil(sqrt(c) * n)
  std::int64_t evaluations = 0;
  bool exhaustive = false;        // the whole space was examined
};

// Looks for V(G) = V1 + V2 with alpha(G_k[V_k]) <= ceil(sqrt(c) n) for
// k = 1, 2. Exhaustive for n <= 20, simulated annealing with exact alpha
// evaluation above. An empty result means the budget ran out, not that no
// bipartition exists. Throws ArgumentError naming an independent set when
// alpha(G) > c n.
BipartitionSearch bipartition_indep_search(const ColoredGraph& cg,
                                           const Rational& c,
                                           std::int64_t budget = 1'000'000,
                                           std::uint64_t seed = 0);

// True iff `witness` is a clique in colour class `color` of cg.
bool revalidate_clique(const ColoredGraph& cg, int color,
                       const std::vector<int>& witness);

}  // namespace rtd
