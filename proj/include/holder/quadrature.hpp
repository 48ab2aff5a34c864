#pragma once

#include <functional>

namespace holder {

struct QuadratureResult {
  double value = 0.0;
  long intervals = 0;
};

// Composite Simpson rule on [a, b]. The interval count doubles (reusing all
// previous nodes) until two successive estimates agree to rel_tol / 4
// relative. Deterministic. Throws QuadratureBudgetExceeded past max_intervals.
QuadratureResult simpson(const std::function<double(double)>& integrand, double a, double b, double rel_tol,
                         long max_intervals = 1L << 24);

}  // namespace holder
