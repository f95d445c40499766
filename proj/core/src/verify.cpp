#include "rtd/verify.hpp"

#include <cmath>
#include <random>
#include <string>

#include "rtd/clique.hpp"
#include "rtd/errors.hpp"

namespace rtd {

namespace {

// Largest clique of `g`, or size 0 for the empty graph.
CliqueResult clique_number(const Graph& g) {
  if (g.n() == 0) return {};
  return max_clique(g);
}

void add_clique_checks(Certificate& cert, const ColoredGraph& cg, int p,
                       int q) {
  const std::array<int, 2> limits{p, q};
  for (int colour = 1; colour <= 2; ++colour) {
    const int s = limits[colour - 1];
    const auto omega = clique_number(cg.color_class(colour));
    const bool pass = omega.size < s;
    cert.add_check("color" + std::to_string(colour) + "_K" + std::to_string(s) +
                       "_free",
                   omega.size, s - 1, pass);
    if (!pass && !cert.witness()) {
      std::vector<int> w(omega.vertices.begin(), omega.vertices.begin() + s);
      cert.set_witness(std::move(w));
    }
  }
}

// Smallest b >= 0 with b^2 >= c n^2, i.e. ceil(sqrt(c) n).
int ceil_sqrt_times(const Rational& c, int n) {
  const Rational target = c * n * n;
  long long b = static_cast<long long>(std::ceil(std::sqrt(to_double(c)) * n));
  if (b < 0) b = 0;
  while (b > 0 && Rational((b - 1) * (b - 1)) >= target) --b;
  while (Rational(b * b) < target) ++b;
  return static_cast<int>(b);
}

}  // namespace

Certificate check_colored_free(const ColoredGraph& cg, int p, int q) {
  if (p < 2 || q < 2) throw ArgumentError("clique sizes must be >= 2");
  Certificate cert({{"check", "colored_free"}, {"p", p}, {"q", q}, {"n", cg.n()}});
  add_clique_checks(cert, cg, p, q);
  return cert;
}

Certificate check_rt_witness(const ColoredGraph& cg, int p, int q, int m) {
  if (p < 2 || q < 2) throw ArgumentError("clique sizes must be >= 2");
  if (m < 1) throw ArgumentError("independence cap must be >= 1");
  Certificate cert(
      {{"check", "rt_witness"}, {"p", p}, {"q", q}, {"m", m}, {"n", cg.n()}});
  add_clique_checks(cert, cg, p, q);

  const auto& g = cg.underlying();
  const int n = g.n();
  const auto alpha = n == 0 ? CliqueResult{} : independence_number(g);
  const bool pass = alpha.size <= m;
  cert.add_check("independence", alpha.size, m, pass);
  if (!pass && !cert.witness()) cert.set_witness(alpha.vertices);

  const auto edges = g.edge_count();
  cert.set_param("edges", edges);
  cert.set_param("alpha", alpha.size);
  cert.set_param("density",
                 n == 0 ? 0.0 : static_cast<double>(edges) / (double(n) * n));
  return cert;
}

EdgeFormula parse_edge_formula(const std::string& id) {
  if (id == "kkl36") return EdgeFormula::kKkl36;
  if (id == "c37") return EdgeFormula::kC37;
  throw ArgumentError("unknown edge formula '" + id + "' (kkl36|c37)");
}

std::string to_string(EdgeFormula f) {
  return f == EdgeFormula::kKkl36 ? "kkl36" : "c37";
}

Rational edge_formula_coefficient(EdgeFormula f, const Rational& delta) {
  switch (f) {
    case EdgeFormula::kKkl36:
      return Rational(5, 12) + delta / 2 + 2 * delta * delta;
    case EdgeFormula::kC37:
      return Rational(7, 16) + delta / 2;
  }
  throw ArgumentError("unknown edge formula");
}

Certificate edge_formula_check(const ColoredGraph& cg, EdgeFormula formula,
                               const Rational& delta, const Rational& tol) {
  if (tol <= 0) throw ArgumentError("tolerance must be positive");
  const int n = cg.n();
  const Rational n2 = Rational(n) * n;
  const Rational expected = edge_formula_coefficient(formula, delta) * n2;
  const auto edges = cg.underlying().edge_count();
  Rational deviation = Rational(edges) - expected;
  if (deviation < 0) deviation = -deviation;
  const Rational allowed = tol * n2;

  Certificate cert({{"check", "edge_formula"},
                    {"formula", to_string(formula)},
                    {"delta", to_fraction_string(delta)},
                    {"tol", to_fraction_string(tol)},
                    {"n", n},
                    {"edges", edges},
                    {"formula_value", to_fraction_string(expected)},
                    {"normalized_gap",
                     n == 0 ? 0.0 : to_double(deviation / n2)}});
  cert.add_check("edge_count_deviation", to_double(deviation),
                 to_double(allowed), deviation <= allowed);
  return cert;
}

CensusResult monochromatic_triangle_census(int n) {
  if (n < 1 || n > 6) throw ArgumentError("census supports 1 <= n <= 6");
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      index[u][v] = index[v][u] = static_cast<int>(pairs.size());
      pairs.emplace_back(u, v);
    }
  std::vector<std::uint32_t> triangles;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        triangles.push_back((1u << index[a][b]) | (1u << index[a][c]) |
                            (1u << index[b][c]));

  const int e = static_cast<int>(pairs.size());
  const std::uint32_t all = e == 32 ? ~0u : ((1u << e) - 1);
  CensusResult out;
  out.colorings = 1 << e;
  for (std::uint32_t mask = 0; mask <= all; ++mask) {
    bool mono = false;
    for (auto t : triangles) {
      if ((mask & t) == t || (mask & t) == 0) {
        mono = true;
        break;
      }
    }
    if (!mono) {
      ++out.survivors;
      for (std::uint32_t cls : {mask, ~mask & all}) {
        Graph g(n);
        for (int i = 0; i < e; ++i)
          if ((cls >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
        bool is_c5 = n == 5;
        for (int v = 0; v < n && is_c5; ++v) is_c5 = g.degree(v) == 2;
        if (is_c5) {
          // 2-regular; walk from vertex 0 to confirm a single 5-cycle.
          int prev = -1, cur = 0, steps = 0;
          do {
            int nxt = g.neighbors(cur).first();
            if (nxt == prev) nxt = g.neighbors(cur).next(nxt);
            prev = cur;
            cur = nxt;
            ++steps;
          } while (cur != 0 && steps <= n);
          is_c5 = steps == n;
        }
        if (!is_c5) out.all_pentagonlike = false;
      }
    }
    if (mask == all) break;
  }
  return out;
}

BipartitionSearch bipartition_indep_search(const ColoredGraph& cg,
                                           const Rational& c,
                                           std::int64_t budget,
                                           std::uint64_t seed) {
  if (c <= 0) throw ArgumentError("c must be positive");
  if (budget <= 0) throw ArgumentError("budget must be positive");
  const int n = cg.n();
  const auto& g = cg.underlying();
  if (n > 0) {
    const auto alpha = independence_number(g);
    if (Rational(alpha.size) > c * n) {
      std::string names;
      for (int v : alpha.vertices)
        names += (names.empty() ? "" : ",") + std::to_string(v);
      throw ArgumentError("alpha(G) = " + std::to_string(alpha.size) +
                          " exceeds c*n; independent set {" + names + "}");
    }
  }

  BipartitionSearch out;
  out.bound = ceil_sqrt_times(c, n);
  const Graph comp1 = cg.color_class(1).complement();
  const Graph comp2 = cg.color_class(2).complement();

  auto evaluate = [&](const VertexSet& first, int& a1, int& a2) {
    ++out.evaluations;
    a1 = max_clique_within(comp1, first).size;
    a2 = max_clique_within(comp2, VertexSet::full(n) - first).size;
    return std::max(0, a1 - out.bound) + std::max(0, a2 - out.bound);
  };
  auto accept = [&](const VertexSet& first, int a1, int a2) {
    Bipartition b;
    b.first = first.to_vector();
    b.second = (VertexSet::full(n) - first).to_vector();
    b.alpha_first = a1;
    b.alpha_second = a2;
    b.bound = out.bound;
    out.found = std::move(b);
  };

  if (n <= 20) {
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t k = 0; k < total; ++k) {
      if (out.evaluations >= budget) return out;
      const std::uint64_t mask = total - 1 - k;  // V1 = everything first
      VertexSet first(n);
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) first.insert(v);
      int a1 = 0, a2 = 0;
      if (evaluate(first, a1, a2) == 0) {
        accept(first, a1, a2);
        return out;
      }
    }
    out.exhaustive = true;
    return out;
  }

  std::mt19937_64 rng(seed);
  VertexSet first(n);
  for (int v = 0; v < n; ++v)
    if (rng() & 1) first.insert(v);
  int a1 = 0, a2 = 0;
  int cost = evaluate(first, a1, a2);
  double temperature = 2.0;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (cost > 0 && out.evaluations < budget) {
    const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    VertexSet trial = first;
    if (trial.contains(v)) trial.erase(v); else trial.insert(v);
    int t1 = 0, t2 = 0;
    const int trial_cost = evaluate(trial, t1, t2);
    if (trial_cost <= cost ||
        unit(rng) < std::exp((cost - trial_cost) / temperature)) {
      first = std::move(trial);
      cost = trial_cost;
      a1 = t1;
      a2 = t2;
    }
    temperature = std::max(0.05, temperature * 0.999);
  }
  if (cost == 0) accept(first, a1, a2);
  return out;
}

bool revalidate_clique(const ColoredGraph& cg, int color,
                       const std::vector<int>& witness) {
  for (std::size_t i = 0; i < witness.size(); ++i)
    for (std::size_t j = i + 1; j < witness.size(); ++j)
      if (cg.color(witness[i], witness[j]) != color) return false;
  return true;
}

}  // namespace rtd
