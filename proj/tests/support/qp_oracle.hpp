#pragma once

// Floating-point reference for f and a grid maximization over y.

#include <array>

namespace rtd::testing {

using D5 = std::array<double, 5>;

inline double f_double(const D5& x, const D5& y) {
  double v = 0;
  for (int i = 0; i < 5; ++i) {
    v += 0.3 * x[i] + 0.2 * y[i];
    v += x[i] * y[(i + 2) % 5];
    v += x[i] * x[(i + 2) % 5];
  }
  return v;
}

// f is separable in y given x, so a per-coordinate grid over each y_i's
// feasible interval maximizes over the product grid.
inline double max_f_over_y_grid(const D5& x, int grid = 10'000) {
  D5 y{};
  for (int i = 0; i < 5; ++i) {
    const double hi = 1.0 - x[i] - x[(i + 1) % 5];
    double best_val = -1e300, best_y = 0;
    for (int k = 0; k < grid; ++k) {
      D5 probe = y;
      probe[i] = hi * k / (grid - 1);
      const double v = f_double(x, probe);
      if (v > best_val) {
        best_val = v;
        best_y = probe[i];
      }
    }
    y[i] = best_y;
  }
  return f_double(x, y);
}

}  // namespace rtd::testing
