#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rtd/rational.hpp"

namespace rtd {

enum class RowSource { kKnownValue, kFormula, kConstruction, kConjecture };
std::string to_string(RowSource s);

// One density reference value: lb <= rho <= ub as coefficients of n^2.
// Single-clique rows rho(p, delta) leave q empty.
struct ReportRow {
  int p = 0;
  std::optional<int> q;
  Rational delta;
  Rational lb;
  Rational ub;
  RowSource source = RowSource::kKnownValue;
};

// Known two-colour densities (delta = 0), then for every requested delta
// the (3,6) bracket and the conjectured (3,7) value, then the single-clique
// rows rho(2s+1, delta) and rho(2s, delta) (s >= 2) for every (s, delta).
std::vector<ReportRow> reference_table(std::span<const int> s_values = {},
                                       std::span<const Rational> deltas = {});

struct GapRow {
  Rational delta;
  Rational lb;
  Rational ub;
  Rational gap;
};

// lb = 5/12 + delta/2 + 2 delta^2, ub = 5/12 + delta/2 + 841/400 delta^2.
// Every delta must lie in (0, 1).
std::vector<GapRow> bound_gap_report(std::span<const Rational> deltas);

std::string to_csv(const std::vector<ReportRow>& rows);
std::string to_csv(const std::vector<GapRow>& rows);

}  // namespace rtd
