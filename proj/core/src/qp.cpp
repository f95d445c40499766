#include "rtd/qp.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "rtd/errors.hpp"

namespace rtd {

namespace {

constexpr int kDim = 5;
// x_i x_{i+2} for i = 1..5 (mod 5): {1,3},{2,4},{3,5},{4,1},{5,2}.
constexpr std::array<std::pair<int, int>, 5> kPairs{
    {{0, 2}, {1, 3}, {2, 4}, {3, 0}, {4, 1}}};

std::string var(const char* name, int i) { return name + std::to_string(i + 1); }

void check_x_domain(const Vec5& x, const Vec5* y) {
  for (int i = 0; i < kDim; ++i)
    if (x[i] < 0) throw DomainError("violated constraint " + var("x", i) + " >= 0");
  if (y) {
    for (int i = 0; i < kDim; ++i)
      if ((*y)[i] < 0)
        throw DomainError("violated constraint " + var("y", i) + " >= 0");
  }
  for (int i = 0; i < kDim; ++i) {
    const int j = (i + 1) % kDim;
    Rational lhs = x[i] + x[j];
    if (y) lhs += (*y)[i];
    if (lhs > 1) {
      std::string name = var("x", i) + "+" + var("x", j);
      if (y) name += "+" + var("y", i);
      throw DomainError("violated constraint " + name + " <= 1");
    }
  }
}

Rational cyclic_pair_sum(const Vec5& x) {
  Rational s = 0;
  for (auto [a, b] : kPairs) s += x[a] * x[b];
  return s;
}

// maximize constant + c.x + sign * sum_{pairs} x_a x_b over D_g.
struct Objective {
  Rational constant;
  Vec5 linear;
  int sign;  // +1 or -1 on the cyclic pair sum

  Rational value(const Vec5& x) const {
    Rational v = constant + sign * cyclic_pair_sum(x);
    for (int i = 0; i < kDim; ++i) v += linear[i] * x[i];
    return v;
  }
};

// Gaussian elimination over the rationals; nullopt when singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a,
                                           std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Row k of the D_g constraint system a_k . x <= b_k.
// k < 5: -x_k <= 0; k >= 5: x_{k-5} + x_{k-4} <= 1.
void constraint(int k, Vec5& row, Rational& rhs) {
  row.fill(0);
  if (k < kDim) {
    row[k] = -1;
    rhs = 0;
  } else {
    row[k - kDim] = 1;
    row[(k - kDim + 1) % kDim] = 1;
    rhs = 1;
  }
}

bool feasible(const Vec5& x) {
  for (int i = 0; i < kDim; ++i) {
    if (x[i] < 0) return false;
    if (x[i] + x[(i + 1) % kDim] > 1) return false;
  }
  return true;
}

struct KktOutcome {
  Rational value;
  Vec5 argmax;
  int active_sets = 0;
  int candidates = 0;
};

// Every local maximum of a quadratic over a polytope lies in the relative
// interior of some face where the restricted problem is stationary. Faces
// whose restricted Hessian is singular contain a maximizer on a smaller
// face, so skipping singular systems loses nothing.
KktOutcome kkt_enumeration(const Objective& obj) {
  KktOutcome out;
  bool have = false;
  for (int mask = 0; mask < (1 << (2 * kDim)); ++mask) {
    ++out.active_sets;
    std::vector<int> active;
    for (int k = 0; k < 2 * kDim; ++k)
      if ((mask >> k) & 1) active.push_back(k);
    const std::size_t r = active.size();
    const std::size_t size = kDim + r;
    std::vector<std::vector<Rational>> m(size, std::vector<Rational>(size, 0));
    std::vector<Rational> rhs(size, 0);
    for (auto [a, b] : kPairs) {
      m[a][b] += obj.sign;
      m[b][a] += obj.sign;
    }
    for (int i = 0; i < kDim; ++i) rhs[i] = -obj.linear[i];
    for (std::size_t j = 0; j < r; ++j) {
      Vec5 row;
      Rational bound;
      constraint(active[j], row, bound);
      for (int i = 0; i < kDim; ++i) {
        m[i][kDim + j] = -row[i];
        m[kDim + j][i] = row[i];
      }
      rhs[kDim + j] = bound;
    }
    const auto sol = solve(std::move(m), std::move(rhs));
    if (!sol) continue;
    Vec5 x;
    for (int i = 0; i < kDim; ++i) x[i] = (*sol)[i];
    if (!feasible(x)) continue;
    ++out.candidates;
    const Rational v = obj.value(x);
    if (!have || v > out.value ||
        (v == out.value &&
         std::lexicographical_compare(out.argmax.begin(), out.argmax.end(),
                                      x.begin(), x.end()))) {
      out.value = v;
      out.argmax = x;
      have = true;
    }
  }
  return out;
}

struct GridOutcome {
  double value = 0;
  std::array<double, 5> argmax{};
  double ascent_value = 0;
};

// Exhaustive grid at step 1/100 in exact integer arithmetic (values scaled
// by 10^4). The objective is affine in each coordinate, so the innermost
// coordinate only needs its two endpoints. Then projected coordinate ascent.
GridOutcome grid_and_ascent(const Objective& obj) {
  constexpr int kSteps = 100;
  std::array<long long, 5> lin{};
  for (int i = 0; i < kDim; ++i)
    lin[i] = (obj.linear[i] * kSteps).convert_to<long long>();
  const long long base = (obj.constant * kSteps * kSteps).convert_to<long long>();

  auto scaled = [&](const std::array<int, 5>& g) {
    long long v = base;
    for (int i = 0; i < kDim; ++i) v += lin[i] * g[i];
    long long q = 0;
    for (auto [a, b] : kPairs) q += static_cast<long long>(g[a]) * g[b];
    return v + obj.sign * q;
  };

  long long best = 0;
  std::array<int, 5> best_g{};
  bool have = false;
  std::array<int, 5> g{};
  for (g[0] = 0; g[0] <= kSteps; ++g[0])
    for (g[1] = 0; g[0] + g[1] <= kSteps; ++g[1])
      for (g[2] = 0; g[1] + g[2] <= kSteps; ++g[2])
        for (g[3] = 0; g[2] + g[3] <= kSteps; ++g[3]) {
          const int hi = std::min(kSteps - g[3], kSteps - g[0]);
          for (int end : {0, hi}) {
            g[4] = end;
            const long long v = scaled(g);
            if (!have || v > best) {
              best = v;
              best_g = g;
              have = true;
            }
          }
        }

  GridOutcome out;
  out.value = static_cast<double>(best) / (kSteps * kSteps);
  std::array<double, 5> x{};
  for (int i = 0; i < kDim; ++i) x[i] = static_cast<double>(best_g[i]) / kSteps;
  out.argmax = x;

  std::array<double, 5> c{};
  for (int i = 0; i < kDim; ++i) c[i] = to_double(obj.linear[i]);
  auto value = [&](const std::array<double, 5>& p) {
    double v = to_double(obj.constant);
    for (int i = 0; i < kDim; ++i) v += c[i] * p[i];
    double q = 0;
    for (auto [a, b] : kPairs) q += p[a] * p[b];
    return v + obj.sign * q;
  };
  for (int sweep = 0; sweep < 1000; ++sweep) {
    bool moved = false;
    for (int k = 0; k < kDim; ++k) {
      double slope = c[k];
      for (auto [a, b] : kPairs) {
        if (a == k) slope += obj.sign * x[b];
        if (b == k) slope += obj.sign * x[a];
      }
      const double hi = std::max(
          0.0, std::min(1.0 - x[(k + 4) % kDim], 1.0 - x[(k + 1) % kDim]));
      const double target = slope > 0 ? hi : (slope < 0 ? 0.0 : x[k]);
      if (std::abs(target - x[k]) > 1e-15) {
        x[k] = target;
        moved = true;
      }
    }
    if (!moved) break;
  }
  out.ascent_value = value(x);
  return out;
}

QpCertificate certify(const Objective& obj) {
  const auto kkt = kkt_enumeration(obj);
  const auto grid = grid_and_ascent(obj);
  QpCertificate cert;
  cert.max_value = kkt.value;
  cert.argmax.x = kkt.argmax;
  cert.method = "kkt-enumeration+grid-ascent";
  cert.active_sets = kkt.active_sets;
  cert.kkt_candidates = kkt.candidates;
  cert.grid_value = grid.value;
  cert.grid_argmax = grid.argmax;
  cert.ascent_value = grid.ascent_value;
  cert.agreement_gap = std::abs(to_double(kkt.value) - grid.ascent_value);
  if (cert.agreement_gap > 1e-6)
    throw CertificationError(
        "KKT enumeration (" + to_fraction_string(kkt.value) +
        ") and grid ascent (" + format_decimal(grid.ascent_value) +
        ") disagree");
  if (grid.value > to_double(kkt.value) + 1e-9)
    throw CertificationError("grid point exceeds the KKT maximum");
  return cert;
}

Objective reduced_f_objective() {
  Objective o;
  o.constant = 1;
  o.linear.fill(Rational(9, 10));
  o.sign = -1;
  return o;
}

Objective g_objective() {
  Objective o;
  o.constant = 0;
  o.linear = {0, 0, Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  o.sign = +1;
  return o;
}

}  // namespace

Rational eval_f(const QpPoint& pt) {
  if (!pt.y) throw DomainError("f needs y coordinates");
  const Vec5& x = pt.x;
  const Vec5& y = *pt.y;
  check_x_domain(x, &y);
  Rational sx = 0, sy = 0, xy = 0;
  for (int i = 0; i < kDim; ++i) {
    sx += x[i];
    sy += y[i];
    xy += x[i] * y[(i + 2) % kDim];
  }
  return Rational(3, 10) * sx + Rational(1, 5) * sy + xy + cyclic_pair_sum(x);
}

Rational eval_g(const QpPoint& pt) {
  if (pt.y) throw DomainError("g takes no y coordinates");
  check_x_domain(pt.x, nullptr);
  const Vec5& x = pt.x;
  return Rational(1, 2) * (x[2] + x[3] + x[4]) + cyclic_pair_sum(x);
}

Vec5 optimal_y(const Vec5& x) {
  check_x_domain(x, nullptr);
  Vec5 y;
  for (int i = 0; i < kDim; ++i) y[i] = 1 - x[i] - x[(i + 1) % kDim];
  return y;
}

Rational reduce_f_over_y(const Vec5& x) { return eval_f({x, optimal_y(x)}); }

Rational reduced_f_closed_form(const Vec5& x) {
  check_x_domain(x, nullptr);
  return reduced_f_objective().value(x);
}

QpCertificate maximize_f() {
  auto cert = certify(reduced_f_objective());
  cert.argmax.y = optimal_y(cert.argmax.x);
  if (eval_f(cert.argmax) != cert.max_value)
    throw CertificationError("f at the reduced maximizer differs from the "
                             "reduced maximum");
  return cert;
}

QpCertificate maximize_g() {
  auto cert = certify(g_objective());
  if (eval_g(cert.argmax) != cert.max_value)
    throw CertificationError("g at the maximizer differs from the maximum");
  return cert;
}

QpPoint printed_f_argmax() {
  const Rational a(9, 20), b(11, 20);
  return {{a, b, a, 0, 0}, Vec5{0, 0, b, 1, 0}};
}

QpPoint corrected_f_argmax() {
  const Rational a(9, 20), b(11, 20);
  return {{a, b, a, 0, 0}, Vec5{0, 0, b, 1, b}};
}

}  // namespace rtd
