#include "rtd/report.hpp"

#include <sstream>

#include "rtd/constructions.hpp"
#include "rtd/errors.hpp"

namespace rtd {

std::string to_string(RowSource s) {
  switch (s) {
    case RowSource::kKnownValue: return "known";
    case RowSource::kFormula: return "formula";
    case RowSource::kConstruction: return "construction";
    case RowSource::kConjecture: return "conjecture";
  }
  return "unknown";
}

std::vector<ReportRow> reference_table(std::span<const int> s_values,
                                       std::span<const Rational> deltas) {
  std::vector<ReportRow> rows;
  auto exact = [&](int p, std::optional<int> q, Rational delta, Rational v,
                   RowSource src) {
    rows.push_back({p, q, std::move(delta), v, v, src});
  };

  exact(3, 3, 0, Rational(1, 4), RowSource::kKnownValue);
  exact(3, 4, 0, Rational(1, 3), RowSource::kKnownValue);
  exact(3, 5, 0, Rational(2, 5), RowSource::kKnownValue);
  exact(3, 6, 0, Rational(5, 12), RowSource::kKnownValue);
  exact(3, 7, 0, Rational(7, 16), RowSource::kKnownValue);
  exact(4, 3, 0, Rational(1, 3), RowSource::kKnownValue);
  exact(4, 4, 0, Rational(11, 28), RowSource::kKnownValue);

  for (const auto& d : deltas) {
    const auto point = density_point_36(d);
    rows.push_back({3, 6, d, point.lower_bound, point.upper_bound,
                    RowSource::kConstruction});
    exact(3, 7, d, Rational(7, 16) + d / 2, RowSource::kConjecture);
  }

  for (int s : s_values) {
    if (s < 1) throw ArgumentError("single-clique rows need s >= 1");
    for (const auto& d : deltas) {
      exact(2 * s + 1, std::nullopt, d,
            (Rational(s - 1, s) + d) / 2, RowSource::kFormula);
      if (s >= 2)
        exact(2 * s, std::nullopt, d,
              (Rational(3 * s - 5, 3 * s - 2) + d - d * d) / 2,
              RowSource::kFormula);
    }
  }
  return rows;
}

std::vector<GapRow> bound_gap_report(std::span<const Rational> deltas) {
  std::vector<GapRow> rows;
  for (const auto& d : deltas) {
    if (d <= 0 || d >= 1)
      throw ArgumentError("delta " + to_fraction_string(d) +
                          " outside (0, 1)");
    const auto point = density_point_36(d);
    rows.push_back({d, point.lower_bound, point.upper_bound,
                    point.upper_bound - point.lower_bound});
  }
  return rows;
}

namespace {

std::string cell(const Rational& r) {
  return to_fraction_string(r) + "," + format_decimal(to_double(r));
}

}  // namespace

std::string to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "p,q,delta,delta_decimal,lb,lb_decimal,ub,ub_decimal,source\n";
  for (const auto& r : rows) {
    out << r.p << ',' << (r.q ? std::to_string(*r.q) : std::string()) << ','
        << cell(r.delta) << ',' << cell(r.lb) << ',' << cell(r.ub) << ','
        << to_string(r.source) << '\n';
  }
  return out.str();
}

std::string to_csv(const std::vector<GapRow>& rows) {
  std::ostringstream out;
  out << "delta,delta_decimal,lb,lb_decimal,ub,ub_decimal,gap,gap_decimal\n";
  for (const auto& r : rows)
    out << cell(r.delta) << ',' << cell(r.lb) << ',' << cell(r.ub) << ','
        << cell(r.gap) << '\n';
  return out.str();
}

}  // namespace rtd
