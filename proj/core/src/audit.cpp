#include "rtd/audit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "rtd/clique.hpp"
#include "rtd/errors.hpp"

namespace rtd {

namespace {

constexpr double kGuard = 1e-12;

PropertyResult upper(std::string name, std::string description,
                     double measured, double threshold, std::string detail = {}) {
  return {std::move(name), std::move(description), measured, threshold, true,
          measured <= threshold + kGuard, std::move(detail)};
}

PropertyResult lower(std::string name, std::string description,
                     double measured, double threshold, std::string detail = {}) {
  return {std::move(name), std::move(description), measured, threshold, false,
          measured >= threshold - kGuard, std::move(detail)};
}

struct Assigned {
  std::array<int, 6> parts{};  // parts[i] = input index playing X_{i+1}
  PropertyResult p2, p3, p3_exists, p4, p7, p8;
  int score() const {
    return p2.pass + p3.pass + p4.pass + p7.pass + p8.pass;
  }
};

}  // namespace

AuditReport audit_partition(const ColoredGraph& cg, const VertexPartition& part,
                            const AuditConfig& cfg) {
  if (part.size() != 6)
    throw ArgumentError("audit needs exactly 6 parts, got " +
                        std::to_string(part.size()));
  if (part.n() != cg.n())
    throw ArgumentError("partition does not cover the coloured graph");
  if (!(cfg.gamma > 0 && cfg.gamma < 1))
    throw ArgumentError("gamma must lie in (0, 1)");

  const int n = cg.n();
  const double nd = n;
  const auto& ex = cfg.exponents;
  auto thr = [&](double e) { return std::pow(cfg.gamma, e) * nd; };
  const Graph& g = cg.underlying();
  const Graph& g1 = cg.color_class(1);
  const Graph& g2 = cg.color_class(2);

  // degree of every vertex into every part, per colour (0 = underlying)
  std::vector<std::array<std::array<int, 6>, 3>> deg(n);
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < 6; ++j) {
      deg[v][0][j] = g.degree_into(v, part.part_set(j));
      deg[v][1][j] = g1.degree_into(v, part.part_set(j));
      deg[v][2][j] = g2.degree_into(v, part.part_set(j));
    }
  std::array<int, 6> size{};
  std::array<int, 6> alpha1{};
  std::array<int, 6> alpha2{};
  const Graph comp1 = g1.complement();
  const Graph comp2 = g2.complement();
  for (int j = 0; j < 6; ++j) {
    size[j] = static_cast<int>(part.part(j).size());
    alpha1[j] = max_clique_within(comp1, part.part_set(j)).size;
    alpha2[j] = max_clique_within(comp2, part.part_set(j)).size;
  }

  AuditReport report;
  report.n = n;
  report.gamma = cfg.gamma;

  double size_dev = 0;
  for (int j = 0; j < 6; ++j)
    size_dev = std::max(size_dev, std::abs(size[j] - nd / 6));
  const auto p1 = upper("P1", "| |X_i| - n/6 | <= 2 gamma^(1/4) n", size_dev,
                        2 * thr(ex.part_size));

  int inner_max = 0;
  for (int j = 0; j < 6; ++j)
    for (int v : part.part(j)) inner_max = std::max(inner_max, deg[v][0][j]);
  const auto p5 = upper("P5", "max degree inside any part <= gamma^(1/117) n",
                        inner_max, thr(ex.inner_degree));

  const int crossing = min_crossing_degree(g, part);
  const auto p6 = lower("P6", "min crossing degree >= n/6 - gamma^(1/118) n",
                        crossing, nd / 6 - thr(ex.crossing));

  for (int j = 0; j < 6; ++j)
    if (alpha1[j] <= thr(ex.part_size) + kGuard)
      report.p2_qualifying_parts.push_back(j);

  auto evaluate = [&](const std::array<int, 6>& as) {
    Assigned a;
    a.parts = as;
    const int x6 = as[5];
    auto X = [&](int i) { return as[((i % 5) + 5) % 5]; };

    a.p2 = upper("P2", "alpha(G1[X6]) <= gamma^(1/4) n", alpha1[x6],
                 thr(ex.part_size), "X6 = input part " + std::to_string(x6));

    double p3_all = 0;
    double p3_any = 0;
    double p4 = 0;
    for (int v : part.part(x6)) {
      int worst = 0;
      int best = n;
      int window = n;
      for (int i = 0; i < 5; ++i) {
        const int m = std::min(deg[v][1][X(i)], deg[v][1][X(i + 2)]);
        worst = std::max(worst, m);
        best = std::min(best, m);
        window = std::min(window, deg[v][1][X(i)] + deg[v][1][X(i + 1)]);
      }
      p3_all = std::max<double>(p3_all, worst);
      p3_any = std::max<double>(p3_any, best);
      p4 = std::max<double>(p4, window);
    }
    a.p3 = upper("P3",
                 "for every v in X6 and every i: min(deg1(v,X_i), "
                 "deg1(v,X_{i+2})) <= gamma^(1/59) n",
                 p3_all, thr(ex.x6_pair));
    a.p3_exists = upper("P3-exists",
                        "for every v in X6 some i has min(deg1(v,X_i), "
                        "deg1(v,X_{i+2})) <= gamma^(1/59) n",
                        p3_any, thr(ex.x6_pair));
    a.p4 = upper("P4",
                 "for every v in X6: min_i deg1(v, X_i + X_{i+1}) <= "
                 "gamma^(1/60) n",
                 p4, thr(ex.x6_window));

    double missing7 = 0;
    double missing8 = 0;
    int alpha8 = 0;
    for (int i = 0; i < 5; ++i) {
      alpha8 = std::max(alpha8, alpha2[X(i)]);
      for (int v : part.part(X(i))) {
        missing7 = std::max<double>(missing7, size[x6] - deg[v][2][x6]);
        for (int j : {X(i - 2), X(i + 2)})
          missing8 = std::max<double>(missing8, size[j] - deg[v][1][j]);
        for (int j : {X(i - 1), X(i + 1)})
          missing8 = std::max<double>(missing8, size[j] - deg[v][2][j]);
      }
    }
    a.p7 = upper("P7",
                 "for v in X_i (i <= 5): |X6| - deg2(v, X6) <= "
                 "gamma^(1/119) n",
                 missing7, thr(ex.color_floor));
    a.p8 = upper("P8",
                 "alpha(G2[X_i]) <= gamma^(1/4) n and colour floors to "
                 "X_{i+-2} (colour 1), X_{i+-1} (colour 2) within "
                 "gamma^(1/119) n",
                 missing8, thr(ex.color_floor),
                 "max alpha(G2[X_i]) = " + std::to_string(alpha8) +
                     ", threshold " + format_decimal(thr(ex.part_size)));
    a.p8.pass = a.p8.pass && alpha8 <= thr(ex.part_size) + kGuard;
    return a;
  };

  std::optional<Assigned> best;
  for (int x6 = 0; x6 < 6; ++x6) {
    std::array<int, 5> rest{};
    for (int j = 0, k = 0; j < 6; ++j)
      if (j != x6) rest[k++] = j;
    do {
      std::array<int, 6> as{rest[0], rest[1], rest[2], rest[3], rest[4], x6};
      auto a = evaluate(as);
      if (!best || a.score() > best->score()) best = std::move(a);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }

  report.assignment = best->parts;
  report.properties = {p1, best->p2, best->p3, best->p4, p5, p6, best->p7,
                       best->p8};
  report.p3_existential = best->p3_exists;
  return report;
}

}  // namespace rtd
