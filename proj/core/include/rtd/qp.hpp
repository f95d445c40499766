#pragma once

#include <array>
#include <optional>
#include <string>

#include "rtd/rational.hpp"

namespace rtd {

using Vec5 = std::array<Rational, 5>;

// A point of D_f (x and y present) or of D_g (y absent). Coordinates are
// stored 0-based; index arithmetic is mod 5.
struct QpPoint {
  Vec5 x;
  std::optional<Vec5> y;

  bool operator==(const QpPoint&) const = default;
};

// f = 3/10 sum x_i + 1/5 sum y_i + sum x_i y_{i+2} + sum x_i x_{i+2}
// on D_f = {x, y >= 0, x_i + x_{i+1} + y_i <= 1}.
// Throws DomainError naming the first violated constraint.
Rational eval_f(const QpPoint& pt);

// g = 1/2 (x_3 + x_4 + x_5) + sum x_i x_{i+2}
// on D_g = {x >= 0, x_i + x_{i+1} <= 1}.
Rational eval_g(const QpPoint& pt);

// f is increasing in every y_i, so for fixed x the best y is
// y_i = 1 - x_i - x_{i+1}.
Vec5 optimal_y(const Vec5& x);

// max over feasible y of f(x, y), computed by filling in optimal_y and
// evaluating f. Requires x in D_g.
Rational reduce_f_over_y(const Vec5& x);

// Closed form of the same quantity: 1 + 9/10 sum x_i - sum x_i x_{i+2}.
Rational reduced_f_closed_form(const Vec5& x);

struct QpCertificate {
  Rational max_value;
  QpPoint argmax;
  std::string method;
  // KKT route
  int active_sets = 0;       // activity patterns examined
  int kkt_candidates = 0;    // nonsingular systems with a feasible solution
  // grid route, step 1/100, refined by projected coordinate ascent
  double grid_value = 0;
  std::array<double, 5> grid_argmax{};
  double ascent_value = 0;
  double agreement_gap = 0;  // |KKT max - ascent max|
};

// Both routes must agree within 1e-6 or CertificationError is thrown.
// Among several exact maximizers the lexicographically largest x is kept.
QpCertificate maximize_f();
QpCertificate maximize_g();

// The maximizer printed alongside the value 2 + 41/400, taken verbatim,
// and the same point with y_5 = 1 - x_5 - x_1 = 0.55.
QpPoint printed_f_argmax();
QpPoint corrected_f_argmax();

}  // namespace rtd
