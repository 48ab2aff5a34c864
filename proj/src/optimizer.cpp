#include "holder/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "holder/errors.hpp"
#include "holder/parallel.hpp"
#include "holder/special_points.hpp"

namespace holder {

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Larger quotient wins; ties go to the lexicographically smaller (x, y).
bool better(const QuotientRecord& a, const QuotientRecord& b) {
  if (a.q != b.q) return a.q > b.q;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

double denominator(double h, double alpha_exp) { return alpha_exp == 0.5 ? std::sqrt(h) : std::pow(h, alpha_exp); }

struct Box {
  double lo;
  double hi;
};

Box search_box(int n, double x_cap) {
  if (n == 0) return {1.0 / alpha_point(1), x_cap};
  const auto [lo, hi] = piece_bounds(n);
  return {lo, hi};
}

std::vector<double> grid(double lo, double hi, int resolution) {
  std::vector<double> pts(static_cast<std::size_t>(resolution) + 1);
  const double h = (hi - lo) / resolution;
  for (int i = 0; i <= resolution; ++i) pts[static_cast<std::size_t>(i)] = lo + i * h;
  pts.back() = hi;
  return pts;
}

// Best pair with xs[i] < ys[j] over the product of two grids.
QuotientRecord sweep(const std::vector<double>& xs, const std::vector<double>& ys, double alpha_exp) {
  std::vector<double> fx(xs.size());
  std::vector<double> fy(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) fx[i] = f(xs[i]);
  for (std::size_t j = 0; j < ys.size(); ++j) fy[j] = f(ys[j]);
  double best = -1.0;
  std::size_t bi = 0;
  std::size_t bj = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (!(xs[i] < ys[j])) continue;
      const double q = std::fabs(fy[j] - fx[i]) / denominator(ys[j] - xs[i], alpha_exp);
      if (q > best || (q == best && (xs[i] < xs[bi] || (xs[i] == xs[bi] && ys[j] < ys[bj])))) {
        best = q;
        bi = i;
        bj = j;
      }
    }
  }
  return quotient(xs[bi], ys[bj], alpha_exp, Provenance::Grid);
}

// Pattern search from a grid optimum, staying inside [box.lo, box.hi] with x < y.
QuotientRecord refine(const QuotientRecord& start, Box box, double step, double alpha_exp) {
  QuotientRecord best = start;
  const double min_step = 1e-15 * (box.hi - box.lo);
  static constexpr std::array<std::array<int, 2>, 8> kMoves{
      {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}}};
  for (int iter = 0; iter < 20000 && step > min_step; ++iter) {
    bool improved = false;
    for (const auto& mv : kMoves) {
      const double x = std::clamp(best.x + mv[0] * step, box.lo, box.hi);
      const double y = std::clamp(best.y + mv[1] * step, box.lo, box.hi);
      if (!(x < y)) continue;
      const QuotientRecord cand = quotient(x, y, alpha_exp, Provenance::Grid);
      if (cand.q > best.q) {
        best = cand;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

struct Residual {
  double f1;
  double f2;
  double j11, j12, j21, j22;
};

Residual stationarity(double x, double y, double a) {
  const double h = y - x;
  const double dfx = df(x);
  const double dfy = df(y);
  const double d = (f(y) - f(x)) / h;
  Residual r{};
  r.f1 = dfx - dfy;
  r.f2 = dfx - a * d;
  r.j11 = ddf(x);
  r.j12 = -ddf(y);
  r.j21 = ddf(x) - a * (d - dfx) / h;
  r.j22 = -a * (dfy - d) / h;
  return r;
}

double norm_inf(const Residual& r) { return std::max(std::fabs(r.f1), std::fabs(r.f2)); }

}  // namespace

std::optional<CriticalPair> critical_pair(int n, double x_cap, double alpha_exp) {
  if (n < 0 || n > kMaxIndex) throw DomainError("critical_pair index out of range");
  Box box = search_box(n, x_cap);
  if (n == 0) box.hi = std::min(x_cap, 4.0 / M_PI);
  if (!(box.hi > box.lo)) return std::nullopt;
  const double span = box.hi - box.lo;
  const auto inside = [&](double x, double y) { return box.lo < x && x < y && y < box.hi && y - x > 1e-9 * span; };

  std::optional<CriticalPair> best;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      double x = box.lo + (i + 0.5) / 5.0 * span;
      double y = box.lo + (j + 0.5) / 5.0 * span;
      if (!(x < y)) continue;
      bool converged = false;
      int iter = 0;
      Residual r = stationarity(x, y, alpha_exp);
      for (; iter < 100; ++iter) {
        const double res = norm_inf(r);
        if (res <= 1e-13) {
          converged = true;
          break;
        }
        const double det = r.j11 * r.j22 - r.j12 * r.j21;
        if (det == 0.0 || !std::isfinite(det)) break;
        const double dx = (-r.f1 * r.j22 + r.j12 * r.f2) / det;
        const double dy = (-r.j11 * r.f2 + r.j21 * r.f1) / det;
        double lambda = 1.0;
        bool accepted = false;
        for (int halving = 0; halving <= 20; ++halving, lambda *= 0.5) {
          const double cx = x + lambda * dx;
          const double cy = y + lambda * dy;
          if (!inside(cx, cy)) continue;
          const Residual cr = stationarity(cx, cy, alpha_exp);
          if (norm_inf(cr) < res) {
            x = cx;
            y = cy;
            r = cr;
            accepted = true;
            break;
          }
        }
        if (!accepted) {
          converged = res <= 1e-10;
          break;
        }
      }
      if (!converged && norm_inf(r) <= 1e-10) converged = true;
      if (!converged || !inside(x, y)) continue;
      CriticalPair cp{quotient(x, y, alpha_exp, Provenance::Newton), norm_inf(r), iter};
      if (!best || better(cp.record, best->record)) best = cp;
    }
  }
  return best;
}

namespace {

void validate_resolution(int resolution, int min) {
  if (resolution < min || resolution > (1 << 14)) {
    throw ConfigError("grid resolution must lie in [" + std::to_string(min) + ", 16384]");
  }
}

void validate_alpha(double alpha_exp) {
  if (!(alpha_exp > 0.0 && alpha_exp <= 0.5)) throw ConfigError("Holder exponent must lie in (0, 1/2]");
}

void consider(PieceSup& out, const QuotientRecord& cand) {
  if (better(cand, out.arg)) {
    out.arg = cand;
    out.sup = cand.q;
  }
}

}  // namespace

PieceSup interval_sup(int n, int resolution, double alpha_exp) {
  if (n < 1 || n > kMaxIndex) throw ConfigError("interval_sup needs 1 <= n <= " + std::to_string(kMaxIndex));
  validate_resolution(resolution, 64);
  validate_alpha(alpha_exp);
  const Box box = search_box(n, 0.0);
  PieceSup out;
  out.n = n;
  out.arg = quotient(box.lo, box.hi, alpha_exp, Provenance::Boundary);
  out.sup = out.arg.q;
  if (const auto cp = critical_pair(n, kDefaultXCap, alpha_exp)) consider(out, cp->record);
  const std::vector<double> pts = grid(box.lo, box.hi, resolution);
  const QuotientRecord g = sweep(pts, pts, alpha_exp);
  consider(out, refine(g, box, (box.hi - box.lo) / resolution, alpha_exp));
  out.arg.interval_index = n;
  return out;
}

PieceSup j0_sup(double x_cap, int resolution, double alpha_exp) {
  validate_resolution(resolution, 64);
  validate_alpha(alpha_exp);
  const Box box = search_box(0, x_cap);
  if (!(box.hi > box.lo)) throw ConfigError("x_cap must exceed 1/alpha_1");
  PieceSup out;
  out.n = 0;
  out.arg = quotient(box.lo, box.hi, alpha_exp, Provenance::Boundary);
  out.sup = out.arg.q;
  if (const auto cp = critical_pair(0, x_cap, alpha_exp)) consider(out, cp->record);
  const std::vector<double> pts = grid(box.lo, box.hi, resolution);
  consider(out, refine(sweep(pts, pts, alpha_exp), box, (box.hi - box.lo) / resolution, alpha_exp));
  // Pairs straddling the zero of f at 1/pi.
  const double inv_pi = 1.0 / M_PI;
  if (x_cap > inv_pi) {
    const QuotientRecord cross = sweep(grid(box.lo, inv_pi, resolution), grid(inv_pi, box.hi, resolution), alpha_exp);
    consider(out, refine(cross, box, (inv_pi - box.lo) / resolution, alpha_exp));
  }
  return out;
}

PieceSup brute_grid_oracle(int n, int resolution, double x_cap, double alpha_exp) {
  if (n < 0 || n > kMaxIndex) throw ConfigError("oracle index out of range");
  validate_resolution(resolution, 1);
  validate_alpha(alpha_exp);
  const Box box = search_box(n, x_cap);
  if (!(box.hi > box.lo)) throw ConfigError("x_cap must exceed 1/alpha_1");
  const std::vector<double> pts = grid(box.lo, box.hi, resolution);
  PieceSup out;
  out.n = n;
  out.arg = sweep(pts, pts, alpha_exp);
  out.sup = out.arg.q;
  return out;
}

SupremumReport global_sup(int n_max, double x_cap, int resolution, double alpha_exp) {
  if (n_max < 1 || n_max > kMaxIndex) throw ConfigError("n_max must lie in [1, " + std::to_string(kMaxIndex) + "]");
  if (!(x_cap >= 4.0 / M_PI) || !std::isfinite(x_cap)) throw ConfigError("x_cap must be at least 4/pi");
  validate_resolution(resolution, 64);
  validate_alpha(alpha_exp);

  SupremumReport rep;
  rep.n_max = n_max;
  rep.x_cap = x_cap;
  rep.resolution = resolution;
  rep.alpha_exp = alpha_exp;
  rep.per_interval.resize(static_cast<std::size_t>(n_max));
  // Root certificates are memoized under a lock; warm them serially so the
  // workers only read.
  for (int n = 1; n <= n_max + 1; ++n) find_alpha(n);
  parallel_for(static_cast<std::size_t>(n_max), [&](std::size_t i) {
    rep.per_interval[i] = interval_sup(static_cast<int>(i) + 1, resolution, alpha_exp);
  });
  rep.j0 = j0_sup(x_cap, resolution, alpha_exp);

  rep.arg = rep.j0.arg;
  for (const PieceSup& p : rep.per_interval) {
    if (better(p.arg, rep.arg)) rep.arg = p.arg;
  }
  rep.witness = quotient(1e-12, 2.0 / M_PI, alpha_exp, Provenance::Boundary);
  if (better(rep.witness, rep.arg)) rep.arg = rep.witness;
  rep.sup_estimate = rep.arg.q;

  const auto count = [&](Provenance p) {
    switch (p) {
      case Provenance::Grid: ++rep.method_breakdown.grid; break;
      case Provenance::Newton: ++rep.method_breakdown.newton; break;
      case Provenance::Boundary: ++rep.method_breakdown.boundary; break;
      case Provenance::Remap: ++rep.method_breakdown.remap; break;
    }
  };
  count(rep.j0.arg.provenance);
  for (const PieceSup& p : rep.per_interval) count(p.arg.provenance);

  const Interval c_bound = enclose_decimal(1.83012);
  const Interval sqrt2 = sqrt(Interval{2.0});
  rep.bound_certificate = sqrt(c_bound).hi();
  rep.within_bound = rep.sup_estimate <= kSqrt2 + 1e-9;

  if (alpha_exp == 0.5) {
    const Interval pi = pi_interval();
    rep.tail_certificates.push_back(certify_strict(
        "tail.small_x", "Lemma 1.4: sup over J_n <= sqrt(C_n) <= sqrt(1.83012) < sqrt 2 for n > N",
        sqrt2 - sqrt(c_bound),
        "C_n < 1.83012 for every n >= 2 by the Lemma 1.4 bounds; covers J_n for n > " + std::to_string(n_max)));
    rep.tail_certificates.push_back(certify_strict(
        "tail.large_gap", "Proposition 2.4: (1 + theta_1)^2 < 6/pi",
        Interval{6.0} / pi - sqr(Interval{1.0} + theta_iv(1)),
        "-sin theta_1 <= f < 1 and sin theta_1 < theta_1, so q <= (1 + theta_1)/sqrt(3/pi) < sqrt 2 when y - x >= 3/pi"));
    const Interval seven_over_pi = Interval{7.0} / pi;
    if (x_cap >= seven_over_pi.hi()) {
      rep.tail_certificates.push_back(certify_strict(
          "tail.near_gap", "Proposition 2.3: f concave on [1/pi, inf), f'(4/pi) sqrt(3/pi) < sqrt 2",
          sqrt2 - df(Interval{4.0} / pi) * sqrt(Interval{3.0} / pi),
          "y > x_cap >= 7/pi and y - x < 3/pi put x, y beyond 4/pi where 0 < f' <= f'(4/pi)"));
    } else {
      CheckResult c;
      c.id = "tail.near_gap";
      c.anchor = "Proposition 2.3: f concave on [1/pi, inf), f'(4/pi) sqrt(3/pi) < sqrt 2";
      c.verdict = Verdict::Undecided;
      c.margin = Interval{0.0};
      c.detail = "x_cap below 7/pi; pairs with y > x_cap and y - x < 3/pi are not covered";
      rep.tail_certificates.push_back(c);
    }
  }
  return rep;
}

SpotCheck random_pair_check(long pairs, std::uint64_t seed, double lo, double hi) {
  if (!(lo > 0.0 && hi > lo)) throw ConfigError("random pairs need 0 < lo < hi");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  SpotCheck out;
  out.worst.q = -1.0;
  for (long k = 0; k < pairs; ++k) {
    const double x = dist(rng);
    const double y = dist(rng);
    if (x == y) continue;
    const QuotientRecord r = quotient(x, y);
    ++out.pairs;
    if (r.q > kSqrt2 + 1e-9) ++out.violations;
    if (r.q > out.worst.q) out.worst = r;
  }
  return out;
}

}  // namespace holder
