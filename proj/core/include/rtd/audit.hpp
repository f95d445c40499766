#pragma once

#include <array>
#include <string>
#include <vector>

#include "rtd/colored_graph.hpp"
#include "rtd/partition.hpp"

namespace rtd {

// Exponents of gamma used by the eight partition properties.
struct AuditExponents {
  double part_size = 1.0 / 4;     // P1, P2, first part of P8
  double x6_pair = 1.0 / 59;      // P3
  double x6_window = 1.0 / 60;    // P4
  double inner_degree = 1.0 / 117;  // P5
  double crossing = 1.0 / 118;    // P6
  double color_floor = 1.0 / 119;  // P7, P8
};

struct AuditConfig {
  double gamma = 0.1;  // 0 < gamma < 1
  AuditExponents exponents;
};

// One evaluated property. Upper-bound properties pass when
// measured <= threshold; lower-bound ones when measured >= threshold.
// Both comparisons use a 1e-12 guard band.
struct PropertyResult {
  std::string name;
  std::string description;
  double measured = 0;
  double threshold = 0;
  bool upper_bound = true;
  bool pass = false;
  std::string detail;
};

struct AuditReport {
  int n = 0;
  double gamma = 0;
  // Relabelling chosen for the X6 role and the cyclic order of X1..X5:
  // assignment[i] is the input part index playing X_{i+1}.
  std::array<int, 6> assignment{};
  std::vector<int> p2_qualifying_parts;  // input indices
  // P1..P8 in order, then P3 under its existential reading.
  std::vector<PropertyResult> properties;
  PropertyResult p3_existential;

  const PropertyResult& property(int index) const {
    return properties[index - 1];
  }
};

// Evaluates P1..P8 literally with thresholds gamma^e * n. Tries every part
// as X6 and every ordering of the remaining five parts, keeping the first
// assignment that passes the most of P2, P3, P4, P7, P8. Requires exactly
// six parts covering cg.
AuditReport audit_partition(const ColoredGraph& cg, const VertexPartition& part,
                            const AuditConfig& cfg);

}  // namespace rtd
