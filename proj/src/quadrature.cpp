#include "holder/quadrature.hpp"

#include <cmath>
#include <string>

#include "holder/errors.hpp"

namespace holder {

QuadratureResult simpson(const std::function<double(double)>& integrand, double a, double b, double rel_tol,
                         long max_intervals) {
  if (!(rel_tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  if (!(b > a)) throw DomainError("quadrature needs a < b");

  // Nodes are split into endpoint, even-interior and odd-interior sums so a
  // doubling only evaluates the new midpoints.
  long intervals = 16;
  double h = (b - a) / static_cast<double>(intervals);
  const double ends = integrand(a) + integrand(b);
  double even = 0.0;
  double odd = 0.0;
  for (long i = 1; i < intervals; ++i) {
    const double v = integrand(a + static_cast<double>(i) * h);
    ((i % 2 == 0) ? even : odd) += v;
  }
  double previous = h / 3.0 * (ends + 4.0 * odd + 2.0 * even);

  while (true) {
    if (intervals * 2 > max_intervals) {
      throw QuadratureBudgetExceeded("Simpson rule did not reach relative tolerance " + std::to_string(rel_tol) +
                                     " within " + std::to_string(max_intervals) + " intervals");
    }
    intervals *= 2;
    h *= 0.5;
    even += odd;
    odd = 0.0;
    for (long i = 1; i < intervals; i += 2) odd += integrand(a + static_cast<double>(i) * h);
    const double current = h / 3.0 * (ends + 4.0 * odd + 2.0 * even);
    if (std::fabs(current - previous) <= 0.25 * rel_tol * std::fabs(current)) return {current, intervals};
    previous = current;
  }
}

}  // namespace holder
