// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "rtd/canonical.hpp"
#include "rtd/clique.hpp"
#include "rtd/constructions.hpp"
#include "rtd/qp.hpp"
#include "rtd/report.hpp"
#include "rtd/rt_search.hpp"
#include "rtd/verify.hpp"
#include "support/oracles.hpp"
#include "support/qp_oracle.hpp"

namespace {

using namespace rtd;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

bool is_five_cycle(const Graph& g) {
  if (g.n() != 5 || g.edge_count() != 5) return false;
  for (int v = 0; v < 5; ++v)
    if (g.degree(v) != 2) return false;
  return !find_clique(g, 3).has_value();  // 2-regular on 5 vertices, no C3
}

bool is_pentagonlike(const ColoredGraph& cg) {
  return cg.underlying() == Graph::complete(5) && is_five_cycle(cg.color_class(1)) &&
         is_five_cycle(cg.color_class(2));
}

void census(Outcome& o) {
  const auto c = pentagonlike_census();
  o.require(c.colorings == 1024, "1024 colourings");
  o.require(c.survivors == 12, "12 survivors");
  o.require(c.all_pentagonlike, "all survivors pentagonlike");
  o.detail << "colourings=" << c.colorings << " survivors=" << c.survivors
           << " all_pentagonlike=" << std::boolalpha << c.all_pentagonlike;
}

void ramsey_boundary(Outcome& o) {
  const bool five = ramsey_verify(3, 3, 5);
  const auto witness = find_free_coloring(Graph::complete(5), 3, 3);
  const bool six = ramsey_verify(3, 3, 6);
  const auto none = find_free_coloring(Graph::complete(6), 3, 3);
  o.require(five, "ramsey_verify(3,3,5)");
  o.require(witness.coloring &&
                is_pentagonlike(ColoredGraph::from(Graph::complete(5), *witness.coloring)),
            "pentagonlike K5 witness");
  o.require(!six, "ramsey_verify(3,3,6) is false");
  o.require(!none.coloring && none.exhausted, "K6 search exhausted");
  o.require(none.nodes <= (1 << 15), "K6 nodes <= 2^15");
  o.detail << "r(3,3,5)=" << std::boolalpha << five << " r(3,3,6)=" << six
           << " K6 nodes=" << none.nodes;
}

void quadratic_maxima(Outcome& o) {
  const auto g = maximize_g();
  const Rational h(1, 2);
  o.require(g.max_value == 2, "max g = 2");
  o.require(g.argmax.x == Vec5{h, h, h, h, h}, "argmax g = (1/2,...,1/2)");
  o.require(g.agreement_gap <= 1e-6, "g routes agree");
  const auto f = maximize_f();
  o.require(f.max_value == Rational(841, 400), "max f = 841/400");
  o.require(f.agreement_gap <= 1e-6, "f routes agree");
  const Rational printed = eval_f(printed_f_argmax());
  const Rational corrected = eval_f(corrected_f_argmax());
  o.require(printed == Rational(349, 200), "printed point gives 1.745");
  o.require(corrected == Rational(841, 400), "corrected point gives 2.1025");
  o.detail << "max_g=" << to_fraction_string(g.max_value)
           << " max_f=" << to_fraction_string(f.max_value)
           << " gaps=(" << g.agreement_gap << "," << f.agreement_gap << ")"
           << " printed=" << to_double(printed) << " corrected=" << to_double(corrected);
}

void kkl_freeness(Outcome& o) {
  const auto fig = kkl_36({60, 4, 4, 2, RuleVariant::kFigureConsistent});
  const auto fig_cert = check_colored_free(fig.graph, 3, 6);
  o.require(fig_cert.passed(), "figure variant (K3,K6)-free");

  const auto txt = kkl_36({60, 4, 4, 2, RuleVariant::kTextLiteral});
  const auto txt_cert = check_colored_free(txt.graph, 3, 6);
  o.require(!txt_cert.passed(), "text variant fails");
  o.require(txt_cert.witness() && revalidate_clique(txt.graph, 1, *txt_cert.witness()),
            "text witness is a colour-1 triangle");

  // A triangle with one vertex in each of I_i, X_i, X_{i+2}.
  bool spanning = false;
  for (int i = 0; i < 5 && !spanning; ++i) {
    VertexSet within(60);
    for (int v : txt.sets[i]) within.insert(v);
    within |= txt.partition.part_set(i);
    within |= txt.partition.part_set((i + 2) % 5);
    const auto tri = find_clique_within(txt.graph.color_class(1), within, 3);
    if (!tri) continue;
    VertexSet in_i(60);
    for (int v : txt.sets[i]) in_i.insert(v);
    int hits_i = 0, hits_a = 0, hits_b = 0;
    for (int v : *tri) {
      hits_i += in_i.contains(v);
      hits_a += txt.partition.part_of(v) == i;
      hits_b += txt.partition.part_of(v) == (i + 2) % 5;
    }
    if (hits_i == 1 && hits_a == 1 && hits_b == 1 && revalidate_clique(txt.graph, 1, *tri)) {
      spanning = true;
      o.detail << "text triangle in I" << i + 1 << ",X" << i + 1 << ",X"
               << (i + 2) % 5 + 1 << " = {" << (*tri)[0] << "," << (*tri)[1] << ","
               << (*tri)[2] << "} ";
    }
  }
  o.require(spanning, "triangle spanning I_i, X_i, X_{i+2}");
  o.detail << "figure=" << (fig_cert.passed() ? "pass" : "fail")
           << " text=" << (txt_cert.passed() ? "pass" : "fail");
}

void kkl_edge_formula(Outcome& o) {
  const auto small = kkl_36({60, 4, 4, 2, RuleVariant::kFigureConsistent});
  const Rational delta(1, 15);
  const auto cert =
      edge_formula_check(small.graph, EdgeFormula::kKkl36, delta, Rational(2, 100));
  const Rational f60 = edge_formula_coefficient(EdgeFormula::kKkl36, delta) * 3600;
  o.require(small.stats.edges == 1615, "e(G) = 1615 at n = 60");
  o.require(f60 == 1652, "formula value 1652");
  o.require(cert.passed(), "edge_formula_check tol 0.02");

  const auto large = kkl_36({120, 8, 8, 4, RuleVariant::kFigureConsistent});
  const Rational f120 = edge_formula_coefficient(EdgeFormula::kKkl36, delta) * 14400;
  const Rational gap60 = abs(Rational(small.stats.edges) - f60) / 3600;
  const Rational gap120 = abs(Rational(large.stats.edges) - f120) / 14400;
  o.require(gap120 < gap60, "n=120 normalized gap below n=60 gap");
  o.detail << "e60=" << small.stats.edges << " f60=" << to_fraction_string(f60)
           << " e120=" << large.stats.edges << " f120=" << to_fraction_string(f120)
           << " gap60=" << to_fraction_string(gap60)
           << " gap120=" << to_fraction_string(gap120);
}

void construction_37_checks(Outcome& o) {
  const auto cyc = construction_37(40, 2, DistanceMode::kCyclic);
  o.require(check_colored_free(cyc.graph, 3, 7).passed(), "cyclic (K3,K7)-free");
  const auto e = cyc.graph.underlying().edge_count();
  o.require(Rational(e) == Rational(7, 16) * 1600 + 40, "e = 7/16*1600 + 40");

  const auto lit = construction_37(40, 2, DistanceMode::kLiteral);
  const auto cert = check_colored_free(lit.graph, 3, 7);
  o.require(!cert.passed(), "literal fails");
  bool far = false;
  if (cert.witness() && cert.witness()->size() == 3 &&
      revalidate_clique(lit.graph, 1, *cert.witness())) {
    const auto& w = *cert.witness();
    far = true;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        far = far && std::abs(lit.partition.part_of(w[a]) - lit.partition.part_of(w[b])) >= 3;
    o.detail << "literal triangle parts {" << lit.partition.part_of(w[0]) + 1 << ","
             << lit.partition.part_of(w[1]) + 1 << "," << lit.partition.part_of(w[2]) + 1
             << "} ";
  }
  o.require(far, "colour-1 triangle across parts at distance >= 3");
  o.detail << "e=" << e;
}

void rt_oracle(Outcome& o) {
  const auto r5 = rt_exact({5, 3, 3, 1});
  o.require(r5.value == 10, "rt(5,3,3,1) = 10");
  o.require(r5.witness && is_pentagonlike(*r5.witness), "K5 pentagonlike witness");
  o.require(r5.witness && check_rt_witness(*r5.witness, 3, 3, 1).passed(), "witness re-certifies");
  const auto r6 = rt_exact({6, 3, 3, 1});
  o.require(!r6.value && r6.exhausted, "rt(6,3,3,1) absent");
  const auto r3 = rt_exact({3, 3, 3, 1});
  o.require(r3.value == 3, "rt(3,3,3,1) = 3");
  o.require(r3.witness && check_rt_witness(*r3.witness, 3, 3, 1).passed(), "K3 witness re-certifies");
  o.detail << "rt5=" << r5.value.value_or(-1) << " rt6="
           << (r6.value ? std::to_string(*r6.value) : "absent")
           << " rt3=" << r3.value.value_or(-1);
}

void oracle_equivalence(Outcome& o) {
  std::int64_t graphs = 0, disagreements = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs_up_to_isomorphism(n)) {
      ++graphs;
      for (int p = 1; p <= n; ++p)
        if (find_clique(g, p).has_value() != testing::naive_has_clique(g, p)) ++disagreements;
      if (max_clique(g).size != testing::naive_clique_number(g)) ++disagreements;
      if (independence_number(g).size != testing::naive_independence_number(g)) ++disagreements;
    }
  o.require(graphs == 1 + 2 + 4 + 11 + 34 + 156, "class counts");
  o.require(disagreements == 0, "clique/independence agree with enumeration");

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> pick(0, 1000);
  double worst = 0;
  for (int trial = 0; trial < 100;) {
    std::array<int, 5> k;
    for (auto& v : k) v = pick(rng);
    bool ok = true;
    for (int i = 0; i < 5; ++i) ok = ok && k[i] + k[(i + 1) % 5] <= 1000;
    if (!ok) continue;
    ++trial;
    Vec5 x;
    testing::D5 xd;
    for (int i = 0; i < 5; ++i) {
      x[i] = Rational(k[i], 1000);
      xd[i] = k[i] / 1000.0;
    }
    worst = std::max(worst, std::abs(testing::max_f_over_y_grid(xd) - to_double(reduce_f_over_y(x))));
  }
  o.require(worst <= 1e-9, "y-grid agreement within 1e-9");
  o.detail << "graphs=" << graphs << " disagreements=" << disagreements
           << " worst_y_grid_gap=" << worst;
}

void bound_gaps(Outcome& o) {
  const std::vector<Rational> deltas{Rational(1, 1000), Rational(1, 100), Rational(1, 20),
                                     Rational(1, 10)};
  const auto rows = bound_gap_report(deltas);
  o.require(rows.size() == deltas.size(), "one row per delta");
  for (const auto& r : rows)
    o.require(r.gap == Rational(41, 400) * r.delta * r.delta && r.gap == r.ub - r.lb,
              "gap = 41/400 delta^2 at " + to_fraction_string(r.delta));
  o.require(rows.size() > 1 && rows[1].gap == Rational(1025, 100'000'000), "1.025e-5 at 0.01");
  for (const auto& r : rows) o.detail << to_fraction_string(r.delta) << ":" << to_fraction_string(r.gap) << " ";
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "pentagonlike census", 1, census},
      {2, "Ramsey boundary r(3,3)=6", 1, ramsey_boundary},
      {3, "quadratic maxima", 30, quadratic_maxima},
      {4, "KKL (3,6) colouring freeness", 10, kkl_freeness},
      {5, "KKL edge formula", 10, kkl_edge_formula},
      {6, "(3,7) construction", 5, construction_37_checks},
      {7, "RT exact oracle", 60, rt_oracle},
      {8, "oracle equivalence", 300, oracle_equivalence},
      {9, "bound gap report", 1, bound_gaps},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "] ";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.detail << " [over time limit " << c.limit_seconds << " s]";
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name
              << ", " << secs << " s): " << o.detail.str() << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
