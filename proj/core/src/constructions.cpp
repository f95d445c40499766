#include "rtd/constructions.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "rtd/clique.hpp"
#include "rtd/errors.hpp"

namespace rtd {

namespace {

struct BlowupShape {
  int k = 0;
  int t = 0;
  int degree() const { return k * t; }
};

// Andrasfai graph for k >= 1; k = 1 gives K2.
Graph andrasfai_any(int k) {
  const int n = 3 * k - 1;
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int r = 1; r <= 3 * k - 2; r += 3) g.add_edge(v, (v + r) % n);
  return g;
}

std::vector<BlowupShape> shapes_for(int m) {
  std::vector<BlowupShape> out;
  for (int k = 1; 3 * k - 1 <= m; ++k)
    if (m % (3 * k - 1) == 0) out.push_back({k, m / (3 * k - 1)});
  return out;
}

std::optional<BlowupShape> choose_shape(int m, int d_target) {
  const auto shapes = shapes_for(m);
  std::optional<BlowupShape> below;
  std::optional<BlowupShape> above;
  for (const auto& s : shapes) {
    if (s.degree() <= d_target) {
      if (!below || s.degree() > below->degree()) below = s;
    } else if (!above || s.degree() < above->degree()) {
      above = s;
    }
  }
  return below ? below : above;
}

int cyclic_distance(int a, int b, int modulus) {
  const int d = std::abs(a - b) % modulus;
  return std::min(d, modulus - d);
}

// Largest degree <= cap realizable exactly (no padding) on m vertices.
std::optional<int> best_exact_degree(int m, long long cap) {
  std::optional<int> best;
  for (const auto& s : shapes_for(m))
    if (s.degree() <= cap && (!best || s.degree() > *best)) best = s.degree();
  return best;
}

}  // namespace

Graph turan(int n, int p) {
  if (p < 1) throw ArgumentError("Turan graph needs p >= 1");
  if (p > n)
    throw ArgumentError("Turan graph needs p <= n (p=" + std::to_string(p) +
                        ", n=" + std::to_string(n) + ")");
  const auto part = turan_partition(n, p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part.part_of(u) != part.part_of(v)) g.add_edge(u, v);
  return g;
}

VertexPartition turan_partition(int n, int p) {
  if (p < 1 || p > n)
    throw ArgumentError("Turan partition needs 1 <= p <= n");
  std::vector<int> sizes(p, n / p);
  for (int i = 0; i < n % p; ++i) ++sizes[i];
  return VertexPartition::blocks(sizes);
}

Graph andrasfai(int k) {
  if (k < 2) throw ArgumentError("Andrasfai graph needs k >= 2");
  return andrasfai_any(k);
}

Graph blowup(const Graph& g, int t) {
  if (t < 1) throw ArgumentError("blow-up factor must be >= 1");
  Graph out(g.n() * t);
  for (auto [u, v] : g.edges())
    for (int a = 0; a < t; ++a)
      for (int b = 0; b < t; ++b) out.add_edge(u * t + a, v * t + b);
  return out;
}

FGraph f_graph(int m, int d_target) {
  if (m < 2) throw ArgumentError("f_graph needs m >= 2");
  FGraph out;
  int core = m;
  std::optional<BlowupShape> shape;
  for (; core >= 2; --core) {
    shape = choose_shape(core, d_target);
    if (shape) break;
  }
  // core >= 2 always has the K(1,1) shape, so `shape` is set here.
  out.k = shape->k;
  out.t = shape->t;
  out.degree = shape->degree();
  out.core_vertices = core;
  out.isolated = m - core;
  out.independence = out.degree + out.isolated;

  const Graph body = blowup(andrasfai_any(out.k), out.t);
  out.graph = Graph(m);
  for (auto [u, v] : body.edges()) out.graph.add_edge(u, v);
  return out;
}

ColoredGraph pentagonlike(std::span<const int> perm) {
  if (perm.size() != 5) throw ArgumentError("pentagonlike needs 5 labels");
  std::array<bool, 5> seen{};
  for (int v : perm) {
    if (v < 0 || v > 4 || seen[v])
      throw ArgumentError("pentagonlike input is not a permutation of 0..4");
    seen[v] = true;
  }
  ColoredGraph cg(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) cg.set_edge(u, v, 2);
  for (int i = 0; i < 5; ++i) cg.set_edge(perm[i], perm[(i + 1) % 5], 1);
  return cg;
}

ColoredGraph pentagon_pattern_turan(int n) {
  const auto part = turan_partition(n, 6);
  const Graph g = turan(n, 6);
  ColoredGraph cg(n);
  for (auto [u, v] : g.edges()) {
    const int a = part.part_of(u);
    const int b = part.part_of(v);
    const bool blue = a < 5 && b < 5 && cyclic_distance(a, b, 5) == 2;
    cg.set_edge(u, v, blue ? 1 : 2);
  }
  return cg;
}

void KklParams::validate() const {
  if (n <= 0 || n % 6 != 0)
    throw ArgumentError("kkl_36 needs n divisible by 6, got n=" +
                        std::to_string(n));
  if (d1 < 1) throw ArgumentError("kkl_36 needs d1 >= 1");
  if (d2 < 1) throw ArgumentError("kkl_36 needs d2 >= 1");
  if (m2 < 2) throw ArgumentError("kkl_36 needs m2 >= 2");
  if (isolated() < 0)
    throw ArgumentError("kkl_36: m2 + 3*ceil(d2/2) = " +
                        std::to_string(m2 + 3 * clone_size()) +
                        " exceeds n/6 = " + std::to_string(n / 6));
}

KklPlan plan_kkl_36(int n, const Rational& delta, RuleVariant variant) {
  if (n <= 0 || n % 6 != 0)
    throw ArgumentError("kkl_36 needs n divisible by 6");
  if (delta <= 0 || delta >= 1) throw ArgumentError("delta must lie in (0,1)");
  KklPlan plan;
  plan.delta_n = floor_to_int(delta * n);
  const int part = n / 6;
  const auto d1 = best_exact_degree(part, plan.delta_n);
  if (!d1)
    throw ConstructionError("d1: no F(" + std::to_string(part) +
                            ", d) with d <= " + std::to_string(plan.delta_n));
  const long long m2 = part - (3 * plan.delta_n) / 2;
  if (m2 < 2)
    throw ConstructionError("m2 = n/6 - floor(3 delta n / 2) = " +
                            std::to_string(m2) + " is too small");
  const auto d2 = best_exact_degree(static_cast<int>(m2), plan.delta_n);
  if (!d2)
    throw ConstructionError("d2: no F(" + std::to_string(m2) +
                            ", d) with d <= " + std::to_string(plan.delta_n));
  plan.params = {n, *d1, static_cast<int>(m2), *d2, variant};
  plan.d1_shortfall = static_cast<int>(plan.delta_n - *d1);
  plan.d2_shortfall = static_cast<int>(plan.delta_n - *d2);
  plan.params.validate();
  return plan;
}

KklConstruction kkl_36(const KklParams& params) {
  params.validate();
  const int n = params.n;
  const int s = n / 6;
  const int c = params.clone_size();

  const FGraph f1 = f_graph(s, params.d1);
  if (f1.isolated != 0 || f1.degree != params.d1)
    throw ConstructionError("d1: F(" + std::to_string(s) + ", " +
                            std::to_string(params.d1) +
                            ") is not realizable; closest degree is " +
                            std::to_string(f1.degree));
  const FGraph f2 = f_graph(params.m2, params.d2);
  if (f2.isolated != 0 || f2.degree != params.d2)
    throw ConstructionError("d2: F(" + std::to_string(params.m2) + ", " +
                            std::to_string(params.d2) +
                            ") is not realizable; closest degree is " +
                            std::to_string(f2.degree));

  const auto alpha2 = independence_number(f2.graph);
  if (alpha2.size < params.d2)
    throw ConstructionError("d2: F2 has no independent set of size d2");
  std::vector<int> independent(alpha2.vertices.begin(),
                               alpha2.vertices.begin() + params.d2);

  const int x6 = 5 * s;
  KklConstruction out;
  // I1, I2 are vertices of F2; I3..I5 are the clone blocks after F2.
  for (int j = 0; j < params.d2; ++j)
    out.sets[j < c ? 0 : 1].push_back(x6 + independent[j]);
  for (int b = 0; b < 3; ++b)
    for (int j = 0; j < c; ++j) out.sets[2 + b].push_back(x6 + params.m2 + b * c + j);

  std::vector<int> set_of(n, -1);
  for (int a = 0; a < 5; ++a)
    for (int v : out.sets[a]) set_of[v] = a;

  out.partition = turan_partition(n, 6);
  Graph g = turan(n, 6);
  out.stats.turan_edges = g.edge_count();

  for (int a = 0; a < 5; ++a)
    for (auto [u, v] : f1.graph.edges()) g.add_edge(a * s + u, a * s + v);

  Graph inner(s);
  for (auto [u, v] : f2.graph.edges()) inner.add_edge(u, v);
  for (int b = 0; b < 3; ++b) {
    for (int j = 0; j < c; ++j) {
      const int clone = params.m2 + b * c + j;
      f2.graph.neighbors(independent[j]).for_each(
          [&](int w) { inner.add_edge(clone, w); });
    }
  }
  for (int a = 0; a < 5; ++a)
    for (int u : out.sets[a])
      for (int v : out.sets[(a + 2) % 5]) inner.add_edge(u - x6, v - x6);
  for (auto [u, v] : inner.edges()) g.add_edge(x6 + u, x6 + v);

  const int shift = params.variant == RuleVariant::kFigureConsistent ? 1 : 2;
  ColoredGraph cg(n);
  for (auto [u, v] : g.edges()) {
    const int a = out.partition.part_of(u);
    const int b = out.partition.part_of(v);
    int colour = 2;
    std::int64_t* rule = &out.stats.rule4_edges;
    if (a == b) {
      if (a == 5 && !(set_of[u] >= 0 && set_of[v] >= 0)) {
        colour = 1;
        rule = &out.stats.rule3_edges;
      }
    } else if (b < 5) {
      if (cyclic_distance(a, b, 5) == 2) {
        colour = 1;
        rule = &out.stats.rule1_edges;
      }
    } else {
      // u in X_{a+1}, v in X6
      const int i = set_of[v];
      if (i >= 0 && (a == i || a == (i + shift) % 5)) {
        colour = 1;
        rule = &out.stats.rule2_edges;
      }
    }
    cg.set_edge(u, v, colour);
    ++*rule;
  }
  out.graph = std::move(cg);

  out.stats.edges = g.edge_count();
  out.stats.planted_edges = 5 * f1.graph.edge_count();
  out.stats.inner_edges = inner.edge_count();
  const auto alpha = independence_number(g);
  out.stats.independence = alpha.size;
  out.stats.independence_witness = alpha.vertices;
  return out;
}

C37Construction construction_37(int n, int d, DistanceMode mode) {
  if (n <= 0 || n % 8 != 0)
    throw ArgumentError("construction_37 needs n divisible by 8, got n=" +
                        std::to_string(n));
  const int s = n / 8;
  if (s < 2) throw ArgumentError("construction_37 needs n >= 16");
  C37Construction out;
  out.planted = f_graph(s, d);
  if (out.planted.isolated != 0 || out.planted.degree != d)
    throw ConstructionError("d: F(" + std::to_string(s) + ", " +
                            std::to_string(d) +
                            ") is not realizable; closest degree is " +
                            std::to_string(out.planted.degree));
  out.partition = turan_partition(n, 8);
  ColoredGraph cg(n);
  for (int a = 0; a < 8; ++a)
    for (auto [u, v] : out.planted.graph.edges())
      cg.set_edge(a * s + u, a * s + v, 2);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int a = u / s;
      const int b = v / s;
      if (a == b) continue;
      const int dist =
          mode == DistanceMode::kCyclic ? cyclic_distance(a, b, 8) : b - a;
      cg.set_edge(u, v, (dist == 1 || dist == 2) ? 2 : 1);
    }
  }
  out.graph = std::move(cg);
  return out;
}

DensityPoint density_point_36(const Rational& delta) {
  DensityPoint p;
  p.delta = delta;
  const Rational base = Rational(5, 12) + delta / 2;
  p.lower_bound = base + 2 * delta * delta;
  p.upper_bound = base + Rational(841, 400) * delta * delta;
  return p;
}

std::string to_string(RuleVariant v) {
  return v == RuleVariant::kTextLiteral ? "text" : "figure";
}

std::string to_string(DistanceMode m) {
  return m == DistanceMode::kCyclic ? "cyclic" : "literal";
}

RuleVariant parse_rule_variant(const std::string& s) {
  if (s == "text") return RuleVariant::kTextLiteral;
  if (s == "figure") return RuleVariant::kFigureConsistent;
  throw ArgumentError("unknown rule variant '" + s + "' (text|figure)");
}

DistanceMode parse_distance_mode(const std::string& s) {
  if (s == "cyclic") return DistanceMode::kCyclic;
  if (s == "literal") return DistanceMode::kLiteral;
  throw ArgumentError("unknown distance mode '" + s + "' (cyclic|literal)");
}

}  // namespace rtd
