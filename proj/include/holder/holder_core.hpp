#pragma once

#include <string>
#include <utility>
#include <vector>

#include "holder/check.hpp"
#include "holder/interval.hpp"

namespace holder {

// f(x) = x sin(1/x) and its first two derivatives, for x > 0.
// Point forms throw DomainError for x <= 0. Interval forms additionally
// throw ArgumentTooLarge when 1/x exceeds the reduction budget (x < 1e-6).
double f(double x);
double df(double x);
double ddf(double x);
Interval f(const Interval& x);
Interval df(const Interval& x);
Interval ddf(const Interval& x);

enum class Provenance { Grid, Newton, Boundary, Remap };
const char* to_string(Provenance p);

// A candidate pair for the Holder quotient |f(x) - f(y)| / (y - x)^alpha_exp.
struct QuotientRecord {
  double x = 0.0;
  double y = 0.0;  // y > x
  double alpha_exp = 0.5;
  double q = 0.0;
  // Common monotone piece J_m of x and y, or -1 if they lie in different
  // pieces (or beyond the root table).
  int interval_index = -1;
  Provenance provenance = Provenance::Grid;
};

// Orders the pair so that x < y. Throws DomainError if x or y <= 0, x == y,
// or alpha_exp is outside (0, 1/2].
QuotientRecord quotient(double x, double y, double alpha_exp = 0.5, Provenance provenance = Provenance::Grid);

// Index m of the monotone piece containing x: J_0 = [1/alpha_1, inf),
// J_m = [1/alpha_{m+1}, 1/alpha_m). Returns -1 below 1/alpha_{kMaxIndex+1}.
int piece_index(double x);

// Closed point bounds of J_m for m >= 1, i.e. {1/alpha_{m+1}, 1/alpha_m}.
std::pair<double, double> piece_bounds(int m);

// Wirtinger's inequality for g = f' on J_n (g vanishes at both ends):
// int g^2 <= ((b - a)/pi)^2 int g'^2, both sides by Simpson at `tol`.
CheckResult wirtinger_check(int n, double tol = 1e-12);

// Equality case g(t) = sin(pi (t - a)/(b - a)): passes iff the ratio of the
// two sides is 1 within ratio_tol.
CheckResult wirtinger_equality_check(double a, double b, double ratio_tol = 1e-9, double quad_tol = 1e-12);

struct Prop23Options {
  double x_max = 8.0;
  // Initial number of certified boxes; undecided boxes are bisected.
  long samples = 10'000;
  // Box budget per regime, as a multiple of the initial count.
  long budget_factor = 64;
};

// f(x) <= sqrt(2 (x - 1/pi)) on [1/pi, x_max], reported separately on the
// three ranges [1/pi, 1/pi + 2/pi^2], (.., 1/pi + 1/2], (.., x_max], plus the
// boundary sliver next to 1/pi and concavity (f'' < 0) on the same range.
std::vector<CheckResult> check_prop_2_3(const Prop23Options& options = {});

// sin theta_{n+1} < sin theta_n, (-1)^n f(1/alpha_n) > 0, and
// f(1/alpha_n) = (-1)^n sin theta_n, for n up to n_max.
std::vector<CheckResult> check_nesting(int n_max);

struct RemapResult {
  double x = 0.0;
  double y = 0.0;
  int piece = 0;
};

// For 0 < x < y, returns x <= x' <= y' <= y inside one closed monotone piece
// with f(x') = f(x) and f(y') = f(y): y' is the first point right of x where
// f takes the value f(y), x' the last point left of y' where it takes f(x).
// Throws RemapFailure if the construction breaks down and DomainError for
// invalid input.
RemapResult remap(double x, double y);

}  // namespace holder
