#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rtd/colored_graph.hpp"
#include "rtd/graph.hpp"
#include "rtd/partition.hpp"
#include "rtd/rational.hpp"

namespace rtd {

// Balanced complete p-partite graph; larger parts first, vertices numbered
// part by part.
Graph turan(int n, int p);
VertexPartition turan_partition(int n, int p);

// Andrasfai circulant on 3k-1 vertices with connection set
// {r : r = 1 mod 3, 1 <= r <= 3k-2}: k-regular, triangle-free, alpha = k.
Graph andrasfai(int k);

// Each vertex becomes an independent t-set, each edge a complete t x t join.
// Copies of vertex v are labelled v*t .. v*t + t-1.
Graph blowup(const Graph& g, int t);

// A triangle-free d-regular graph with independence number d, realized as
// the blow-up of an Andrasfai graph (k = 1 stands for K2, so K(t,t) is in
// the family). Achievable densities are d/m = k/(3k-1).
struct FGraph {
  Graph graph;
  int degree = 0;         // regular degree of the core
  int core_vertices = 0;  // vertices of the Andrasfai blow-up
  int isolated = 0;       // padding vertices appended after the core
  int k = 0;              // Andrasfai index
  int t = 0;              // blow-up factor
  int independence = 0;   // degree + isolated
};

// Among blow-ups with t(3k-1) = m, picks the largest degree tk <= d_target,
// or the smallest one above it when none fits. When m has no such
// factorization, uses the largest realizable m' < m and pads with m - m'
// isolated vertices (reported in `isolated`). Requires m >= 2.
FGraph f_graph(int m, int d_target);

// 2-colouring of K5 whose colour-1 class is the 5-cycle perm[0]..perm[4]
// and whose colour-2 class is the complementary 5-cycle.
ColoredGraph pentagonlike(std::span<const int> perm);

// T(n,6) with parts X1..X6: X_i-X_{i+2} (i in 1..5, mod 5) colour 1, every
// other edge colour 2.
ColoredGraph pentagon_pattern_turan(int n);

enum class RuleVariant { kTextLiteral, kFigureConsistent };

struct KklParams {
  int n = 0;   // divisible by 6
  int d1 = 0;  // degree of the graph planted in X1..X5
  int m2 = 0;  // vertex count of F2
  int d2 = 0;  // degree of F2 and size of the independent set I
  RuleVariant variant = RuleVariant::kFigureConsistent;

  int clone_size() const { return (d2 + 1) / 2; }
  // n/6 - m2 - 3*ceil(d2/2); must be >= 0.
  int isolated() const { return n / 6 - m2 - 3 * clone_size(); }
  // Throws ArgumentError when an invariant fails.
  void validate() const;
};

struct KklPlan {
  KklParams params;
  long long delta_n = 0;  // floor(delta * n)
  int d1_shortfall = 0;   // delta_n - d1
  int d2_shortfall = 0;   // delta_n - d2
};

// Chooses the largest realizable d1, d2 <= floor(delta n) and
// m2 = n/6 - floor(3 delta n / 2). Shortfalls are reported, not hidden.
KklPlan plan_kkl_36(int n, const Rational& delta, RuleVariant variant);

struct KklStats {
  std::int64_t edges = 0;
  std::int64_t turan_edges = 0;
  std::int64_t planted_edges = 0;  // inside X1..X5
  std::int64_t inner_edges = 0;    // inside X6
  int independence = 0;
  std::vector<int> independence_witness;
  // Edge counts by the rule that coloured them.
  std::int64_t rule1_edges = 0;  // X_i - X_{i+2}, colour 1
  std::int64_t rule2_edges = 0;  // I_i - X_j, colour 1
  std::int64_t rule3_edges = 0;  // inside X6 outside the I-I edges, colour 1
  std::int64_t rule4_edges = 0;  // everything else, colour 2
};

struct KklConstruction {
  ColoredGraph graph;
  VertexPartition partition;            // X1..X6
  std::array<std::vector<int>, 5> sets;  // I1..I5 (global labels)
  KklStats stats;
};

// T6(n) with F(n/6, d1) planted in X1..X5 and, in X6, the graph F built
// from F2: independent set I = I1 + I2, clones I3, I4, I5 of I1 that copy
// I1's F2-neighbourhoods, all edges between I_i and I_{i+2}, and isolated
// filler up to n/6 vertices. Colouring:
//   (1) X_i - X_{i+2} colour 1;
//   (2) I_i - (X_i + X_{i+1}) colour 1 [figure], or I_i - (X_i + X_{i+2})
//       [text];
//   (3) X6-inner edges not joining two vertices of I1..I5 colour 1;
//   (4) everything else colour 2.
// Indices are mod 5. Freeness is not asserted here.
KklConstruction kkl_36(const KklParams& params);

enum class DistanceMode { kCyclic, kLiteral };

struct C37Construction {
  ColoredGraph graph;
  VertexPartition partition;
  FGraph planted;
};

// T(n,8) with F(n/8, d) in each part. Inner edges colour 2; the edge
// between parts i and j is colour 2 iff their distance (cyclic mod 8, or
// |i-j|) is 1 or 2, else colour 1.
C37Construction construction_37(int n, int d, DistanceMode mode);

// Bounds on rho(3,6,delta) as edge-density coefficients of n^2.
struct DensityPoint {
  int p = 3;
  int q = 6;
  Rational delta;
  Rational lower_bound;  // 5/12 + delta/2 + 2 delta^2
  Rational upper_bound;  // 5/12 + delta/2 + (841/400) delta^2
};
DensityPoint density_point_36(const Rational& delta);

std::string to_string(RuleVariant v);
std::string to_string(DistanceMode m);
RuleVariant parse_rule_variant(const std::string& s);    // text | figure
DistanceMode parse_distance_mode(const std::string& s);  // cyclic | literal

}  // namespace rtd
