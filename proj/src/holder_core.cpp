#include "holder/holder_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "holder/errors.hpp"
#include "holder/quadrature.hpp"
#include "holder/special_points.hpp"

namespace holder {

namespace {

void require_positive(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("f is defined here for finite x > 0 only");
}

Interval reciprocal(const Interval& x) {
  if (!(x.lo() > 0.0)) throw DomainError("interval forms of f need x > 0");
  const Interval u = Interval{1.0} / x;
  if (u.hi() > kReductionLimit) {
    throw ArgumentTooLarge("1/x exceeds the argument-reduction budget (x below 1e-6)");
  }
  return u;
}

std::string index_detail(int n) { return "n = " + std::to_string(n); }

}  // namespace

double f(double x) {
  require_positive(x);
  return x * std::sin(1.0 / x);
}

double df(double x) {
  require_positive(x);
  const double u = 1.0 / x;
  return std::sin(u) - u * std::cos(u);
}

double ddf(double x) {
  require_positive(x);
  const double u = 1.0 / x;
  return -u * u * u * std::sin(u);
}

Interval f(const Interval& x) { return x * sin(reciprocal(x)); }

// f'(x) = phi(1/x).
Interval df(const Interval& x) { return phi_iv(reciprocal(x)); }

Interval ddf(const Interval& x) {
  const Interval u = reciprocal(x);
  return -(pow(u, 3) * sin(u));
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Grid: return "grid";
    case Provenance::Newton: return "newton";
    case Provenance::Boundary: return "boundary";
    case Provenance::Remap: return "remap";
  }
  return "grid";
}

QuotientRecord quotient(double x, double y, double alpha_exp, Provenance provenance) {
  require_positive(x);
  require_positive(y);
  if (x == y) throw DomainError("quotient needs x != y");
  if (!(alpha_exp > 0.0 && alpha_exp <= 0.5)) throw DomainError("Holder exponent must lie in (0, 1/2]");
  if (x > y) std::swap(x, y);
  QuotientRecord r;
  r.x = x;
  r.y = y;
  r.alpha_exp = alpha_exp;
  const double num = std::fabs(f(x) - f(y));
  const double den = alpha_exp == 0.5 ? std::sqrt(y - x) : std::pow(y - x, alpha_exp);
  r.q = num / den;
  const int px = piece_index(x);
  r.interval_index = (px >= 0 && px == piece_index(y)) ? px : -1;
  r.provenance = provenance;
  return r;
}

int piece_index(double x) {
  require_positive(x);
  const double t = 1.0 / x;
  if (t <= alpha_point(1)) return 0;
  const double n0d = std::floor(t / M_PI);
  if (n0d > kMaxIndex + 1) return -1;
  int n0 = std::max(1, static_cast<int>(n0d));
  // alpha_{n0} lies in (n0 pi, n0 pi + pi/2), so t sits in J_{n0-1} or J_{n0}.
  // A t close to n0 pi may round to the wrong n0; step until bracketed.
  while (n0 > 1 && t <= alpha_point(n0 - 1)) --n0;
  while (n0 <= kMaxIndex && t > alpha_point(n0 + 1)) ++n0;
  const int n = (t <= alpha_point(n0)) ? n0 - 1 : n0;
  if (n > kMaxIndex) return -1;
  return n;
}

std::pair<double, double> piece_bounds(int m) {
  if (m < 1 || m > kMaxIndex) throw DomainError("piece index must lie in [1, " + std::to_string(kMaxIndex) + "]");
  return {1.0 / alpha_point(m + 1), 1.0 / alpha_point(m)};
}

CheckResult wirtinger_check(int n, double tol) {
  const auto [a, b] = piece_bounds(n);
  const double lhs = simpson([](double x) { const double g = df(x); return g * g; }, a, b, tol).value;
  const double rhs_int = simpson([](double x) { const double g = ddf(x); return g * g; }, a, b, tol).value;
  const double scale = (b - a) / M_PI;
  const double rhs = scale * scale * rhs_int;
  std::ostringstream detail;
  detail.precision(12);
  detail << index_detail(n) << ", lhs " << lhs << ", rhs " << rhs;
  return numeric_check("lemma1.6.wirtinger", "Lemma 1.6: int g^2 <= ((b-a)/pi)^2 int g'^2 for g = f' on J_n",
                       (rhs - lhs) / rhs, detail.str());
}

CheckResult wirtinger_equality_check(double a, double b, double ratio_tol, double quad_tol) {
  if (!(b > a)) throw DomainError("equality case needs a < b");
  const double k = M_PI / (b - a);
  const double lhs = simpson([&](double t) { const double g = std::sin(k * (t - a)); return g * g; }, a, b, quad_tol).value;
  const double rhs_int =
      simpson([&](double t) { const double g = k * std::cos(k * (t - a)); return g * g; }, a, b, quad_tol).value;
  const double ratio = lhs / (rhs_int / (k * k));
  std::ostringstream detail;
  detail.precision(17);
  detail << "g(t) = sin(pi (t - a)/(b - a)) on [" << a << ", " << b << "], ratio " << ratio;
  return numeric_check("lemma1.6.equality_case", "Lemma 1.6: equality for g(t) = sin(pi (t-a)/(b-a))",
                       ratio_tol - std::fabs(ratio - 1.0), detail.str());
}

namespace {

struct BoxRun {
  Interval tightest{std::numeric_limits<double>::max()};
  long boxes = 0;
  bool exhausted = false;
};

// Covers [a, b] with `initial` equal boxes and bisects any box where
// margin(box) is not certified positive, within `budget` boxes in total.
template <typename Margin>
BoxRun run_boxes(double a, double b, long initial, long budget, Margin margin) {
  BoxRun run;
  std::vector<Interval> stack;
  const double h = (b - a) / static_cast<double>(initial);
  for (long i = initial - 1; i >= 0; --i) {
    const double lo = (i == 0) ? a : a + static_cast<double>(i) * h;
    const double hi = (i == initial - 1) ? b : a + static_cast<double>(i + 1) * h;
    stack.emplace_back(lo, hi);
  }
  while (!stack.empty()) {
    const Interval box = stack.back();
    stack.pop_back();
    ++run.boxes;
    const Interval m = margin(box);
    if (m.lo() > 0.0) {
      if (m.lo() < run.tightest.lo()) run.tightest = m;
      continue;
    }
    const double mid = box.mid();
    if (run.boxes + static_cast<long>(stack.size()) + 2 > budget || mid <= box.lo() || mid >= box.hi()) {
      run.tightest = m;
      run.exhausted = true;
      break;
    }
    stack.emplace_back(mid, box.hi());
    stack.emplace_back(box.lo(), mid);
  }
  return run;
}

std::string box_detail(double a, double b, const BoxRun& run) {
  std::ostringstream s;
  s.precision(12);
  s << "[" << a << ", " << b << "], " << run.boxes << " boxes";
  if (run.exhausted) s << ", box budget exhausted";
  return s.str();
}

}  // namespace

std::vector<CheckResult> check_prop_2_3(const Prop23Options& options) {
  const Interval pi = pi_interval();
  const Interval inv_pi = Interval{1.0} / pi;
  if (!(options.x_max > inv_pi.hi())) throw DomainError("x_max must exceed 1/pi");
  if (options.samples < 1 || options.budget_factor < 1) throw ConfigError("box counts must be positive");

  // Boxes start just right of 1/pi; the sliver [1/pi, s0] is closed by a
  // Lipschitz bound since sqrt(2(x - 1/pi)) has unbounded slope there.
  const double s0 = inv_pi.hi() * (1.0 + 1e-14);
  const double b1 = (inv_pi + Interval{2.0} / sqr(pi)).hi();
  const double b2 = (inv_pi + Interval{0.5}).hi();
  const double x_max = options.x_max;
  const double span = x_max - s0;

  const auto envelope = [&](const Interval& x) { return sqrt(Interval{2.0} * (x - inv_pi)) - f(x); };

  std::vector<CheckResult> out;
  {
    const Interval sliver{inv_pi.lo(), s0};
    const double lipschitz = df(sliver).mag();
    const Interval width = Interval{s0} - Interval{inv_pi.lo()};
    std::ostringstream d;
    d.precision(6);
    d << "|f'| <= " << lipschitz << " on [1/pi, " << s0 << "], so f(x) <= M d <= sqrt(2 d) for d <= 2/M^2";
    out.push_back(certify_strict("prop2.3.boundary_sliver",
                                 "Proposition 2.3: f(x) <= sqrt(2(x - 1/pi)) next to x = 1/pi",
                                 Interval{2.0} / sqr(Interval{lipschitz}) - width, d.str()));
    out.push_back(certify_nonstrict("prop2.3.boundary_value", "Proposition 2.3: f(1/pi) = 0 (equality at 1/pi)",
                                    Interval{1e-15} - abs(f(inv_pi)), "|f(1/pi)| below 1e-15"));
  }

  struct Regime {
    const char* id;
    const char* anchor;
    double a;
    double b;
  };
  const Regime regimes[] = {
      {"prop2.3.regime1", "Proposition 2.3: f(x) <= sqrt(2(x - 1/pi)) on [1/pi, 1/pi + 2/pi^2]", s0, std::min(b1, x_max)},
      {"prop2.3.regime2", "Proposition 2.3: f(x) <= sqrt(2(x - 1/pi)) on (1/pi + 2/pi^2, 1/pi + 1/2]", b1,
       std::min(b2, x_max)},
      {"prop2.3.regime3", "Proposition 2.3: f(x) < 1 < sqrt(2(x - 1/pi)) beyond 1/pi + 1/2", b2, x_max},
  };
  for (const Regime& r : regimes) {
    if (!(r.b > r.a)) continue;
    const long initial = std::max(16L, static_cast<long>(std::ceil(static_cast<double>(options.samples) * (r.b - r.a) / span)));
    const BoxRun run = run_boxes(r.a, r.b, initial, initial * options.budget_factor, envelope);
    out.push_back(certify_strict(r.id, r.anchor, run.tightest, box_detail(r.a, r.b, run)));
  }

  const long initial = std::max(16L, options.samples);
  const BoxRun concave =
      run_boxes(s0, x_max, initial, initial * options.budget_factor, [](const Interval& x) { return -ddf(x); });
  out.push_back(certify_strict("prop2.3.concavity", "Proposition 2.3: f'' < 0, f concave on [1/pi, x_max]",
                               concave.tightest,
                               box_detail(s0, x_max, concave) + "; on (1/pi, s0] sin(1/x) > 0 since 1/x < pi"));
  return out;
}

std::vector<CheckResult> check_nesting(int n_max) {
  if (n_max < 1 || n_max > kMaxIndex) throw DomainError("nesting depth must lie in [1, " + std::to_string(kMaxIndex) + "]");
  std::vector<CheckResult> shrink;
  std::vector<CheckResult> sign;
  std::vector<CheckResult> value;
  std::vector<int> shrink_idx;
  std::vector<int> idx;
  for (int n = 1; n <= n_max; ++n) {
    const Interval sin_theta = sin(theta_iv(n));
    const Interval end_value = f(Interval{1.0} / alpha_iv(n));
    const Interval signed_value = (n % 2 == 0) ? end_value : -end_value;
    idx.push_back(n);
    sign.push_back(certify_strict("nesting.endpoint_sign", "Theorem 2.4: (-1)^n f(1/alpha_n) > 0", signed_value,
                                  index_detail(n)));
    value.push_back(certify_strict("nesting.endpoint_value", "Theorem 2.4: f(1/alpha_n) = (-1)^n sin theta_n",
                                   Interval{1e-12} - abs(signed_value - sin_theta), index_detail(n)));
    if (n < n_max) {
      shrink_idx.push_back(n);
      shrink.push_back(certify_strict("nesting.sin_theta_decreasing",
                                      "Theorem 2.4: sin theta_{n+1} < sin theta_n, f(J_0) > f(J_1) > ...",
                                      sin_theta - sin(theta_iv(n + 1)), index_detail(n)));
    }
  }
  std::vector<CheckResult> out;
  if (!shrink.empty()) out.push_back(aggregate(shrink, "n", shrink_idx));
  out.push_back(aggregate(sign, "n", idx));
  out.push_back(aggregate(value, "n", idx));
  return out;
}

namespace {

constexpr double kRemapTol = 1e-12;

// Point of [a, b] where the monotone f takes the value v (v assumed within
// the image up to tolerance).
double solve_monotone(double a, double b, double v) {
  const double fa = f(a);
  const double fb = f(b);
  if (fa == fb) return a;
  const bool increasing = fb > fa;
  for (int i = 0; i < 2000; ++i) {
    const double m = a + 0.5 * (b - a);
    if (m <= a || m >= b) break;
    if ((f(m) < v) == increasing) a = m; else b = m;
  }
  return std::fabs(f(a) - v) <= std::fabs(f(b) - v) ? a : b;
}

bool attains(double a, double b, double v) {
  const double fa = f(a);
  const double fb = f(b);
  return std::min(fa, fb) - kRemapTol <= v && v <= std::max(fa, fb) + kRemapTol;
}

}  // namespace

RemapResult remap(double x, double y) {
  require_positive(x);
  require_positive(y);
  if (!(x < y)) throw DomainError("remap needs 0 < x < y");
  const int lx = piece_index(x);
  const int ky = piece_index(y);
  if (lx < 0 || ky < 0) throw DomainError("remap needs x, y >= 1/alpha_{N_max+1}");
  if (lx == ky) return {x, y, ky};

  const double vx = f(x);
  const double vy = f(y);
  // Walk the pieces from x towards y; the first one whose image (restricted
  // to [x, y]) reaches f(y) holds y'.
  for (int m = lx; m >= ky; --m) {
    const double left = (m >= 1) ? std::max(x, 1.0 / alpha_point(m + 1)) : std::max(x, 1.0 / alpha_point(1));
    const double right = (m >= 1) ? std::min(y, 1.0 / alpha_point(m)) : y;
    if (!(left <= right) || !attains(left, right, vy)) continue;
    const double yp = (m == ky && right == y && f(right) == vy) ? y : solve_monotone(left, right, vy);
    if (!attains(left, yp, vx)) {
      std::ostringstream s;
      s.precision(17);
      s << "f(x) = " << vx << " is not attained on [" << left << ", " << yp << "] in J_" << m;
      throw RemapFailure(s.str());
    }
    const double xp = solve_monotone(left, yp, vx);
    if (std::fabs(f(xp) - vx) > kRemapTol || std::fabs(f(yp) - vy) > kRemapTol) {
      throw RemapFailure("monotone preimage search missed the target value in J_" + std::to_string(m));
    }
    return {xp, yp, m};
  }
  throw RemapFailure("f(y) is not attained between x and y");
}

}  // namespace holder
