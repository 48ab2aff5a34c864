#include "holder/interval.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace holder {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// pi/2 split into P1 (33 significant bits, so k * P1 is exact for |k| < 2^20),
// P2 = fl(pi/2 - P1) and P3 = fl(pi/2 - P1 - P2).
constexpr double kHalfPi1 = 0x1.921fb544p+0;
constexpr double kHalfPi2 = 0x1.0b4611a626331p-34;
constexpr double kHalfPi3 = 0x1.1701b839a2520p-88;
constexpr double kTwoOverPi = 0x1.45f306dc9c883p-1;
constexpr double kPiLo = 0x1.921fb54442d18p+1;
constexpr double kEps = 0x1p-52;

std::string describe(double lo, double hi) {
  std::ostringstream os;
  os << std::setprecision(17) << "[" << lo << ", " << hi << "]";
  return os.str();
}

Interval outward(double lo, double hi) { return {round_down(lo), round_up(hi)}; }

// t = k * pi/2 + (r_hi + r_lo) + e with |e| <= err.
struct Reduced {
  long k = 0;
  double r_hi = 0.0;
  double r_lo = 0.0;
  double err = 0.0;
};

Reduced reduce(double t) {
  if (!(std::fabs(t) <= kReductionLimit)) {
    throw ArgumentTooLarge("sin/cos argument outside reduction budget: " + describe(t, t));
  }
  Reduced out;
  if (std::fabs(t) <= 0.78) {
    out.r_hi = t;
    return out;
  }
  const double kd = std::nearbyint(t * kTwoOverPi);
  out.k = static_cast<long>(kd);
  // Exact: both operands are multiples of 2^-53 * 2^e(t) and |s| < 1.
  const double s = std::fma(-kd, kHalfPi1, t);
  const double p = kd * kHalfPi2;
  const double pe = std::fma(kd, kHalfPi2, -p);
  // TwoSum(s, -p).
  const double r = s - p;
  const double bv = r - s;
  const double e1 = (s - (r - bv)) + (-p - bv);
  out.r_hi = r;
  out.r_lo = e1 - pe;
  out.err = std::fabs(kd) * kHalfPi3 * (1.0 + 4 * kEps) + std::fabs(out.r_lo) * kEps + 0x1p-1070;
  return out;
}

int quadrant(long k) { return static_cast<int>(((k % 4) + 4) % 4); }

// Encloses v + corr + [-err, err] where v came from libm (<= 1 ulp).
Interval enclose_unit(double v, double corr, double err) {
  const double w = v + corr;
  err += std::fabs(corr) * kEps;
  double lo = w;
  double hi = w;
  if (err > 0.25 * ulp(w)) {
    lo = w - err;
    hi = w + err;
  }
  lo = std::max(-1.0, round_down(round_down(lo)));
  hi = std::min(1.0, round_up(round_up(hi)));
  return {lo, hi};
}

enum class Trig { Sin, Cos };

Interval trig_point(double t, Trig which) {
  const Reduced red = reduce(t);
  const double s = std::sin(red.r_hi);
  const double c = std::cos(red.r_hi);
  const double err = red.err + 0.5 * red.r_lo * red.r_lo;
  // sin(r_hi + r_lo) = s + c * r_lo + O(r_lo^2); cos likewise.
  const double sin_corr = c * red.r_lo;
  const double cos_corr = -s * red.r_lo;
  int q = quadrant(red.k);
  if (which == Trig::Cos) q = (q + 1) % 4;
  switch (q) {
    case 0: return enclose_unit(s, sin_corr, err);
    case 1: return enclose_unit(c, cos_corr, err);
    case 2: return enclose_unit(-s, -sin_corr, err);
    default: return enclose_unit(-c, -cos_corr, err);
  }
}

Interval trig(const Interval& a, Trig which) {
  if (std::fabs(a.lo()) > kReductionLimit || std::fabs(a.hi()) > kReductionLimit) {
    throw ArgumentTooLarge("sin/cos argument outside reduction budget: " + describe(a.lo(), a.hi()));
  }
  if (a.is_point()) return trig_point(a.lo(), which);
  if (a.width() >= 6.3) return {-1.0, 1.0};

  Interval out = hull(trig_point(a.lo(), which), trig_point(a.hi(), which));

  // Critical points j*pi/2 that may lie in [lo, hi]; ambiguous ones are included.
  const Reduced ra = reduce(a.lo());
  const Reduced rb = reduce(a.hi());
  const bool a_maybe_left = ra.r_hi - std::fabs(ra.r_lo) - ra.err <= 0.0;
  const bool b_maybe_right = rb.r_hi + std::fabs(rb.r_lo) + rb.err >= 0.0;
  const long first = a_maybe_left ? ra.k : ra.k + 1;
  const long last = b_maybe_right ? rb.k : rb.k - 1;
  if (last - first >= 3) return {-1.0, 1.0};

  double lo = out.lo();
  double hi = out.hi();
  for (long j = first; j <= last; ++j) {
    int q = quadrant(j);
    if (which == Trig::Cos) q = (q + 1) % 4;
    // sin peaks at q == 1 and bottoms at q == 3 (cos shifted by one quadrant).
    if (q == 1) hi = 1.0;
    if (q == 3) lo = -1.0;
  }
  return {lo, hi};
}

}  // namespace

Interval::Interval(double v) : lo_(v), hi_(v) {
  if (!std::isfinite(v)) throw DomainError("interval endpoint is not finite");
}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("interval endpoint is not finite: " + describe(lo, hi));
  }
  if (!(lo <= hi)) throw DomainError("interval with lo > hi: " + describe(lo, hi));
}

double Interval::mag() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }

double round_down(double v) { return std::nextafter(v, -kInf); }
double round_up(double v) { return std::nextafter(v, kInf); }

double ulp(double v) {
  const double a = std::fabs(v);
  return std::nextafter(a, kInf) - a;
}

Interval operator+(const Interval& a, const Interval& b) {
  return outward(a.lo() + b.lo(), a.hi() + b.hi());
}

Interval operator-(const Interval& a, const Interval& b) {
  return outward(a.lo() - b.hi(), a.hi() - b.lo());
}

Interval operator*(const Interval& a, const Interval& b) {
  const double p1 = a.lo() * b.lo();
  const double p2 = a.lo() * b.hi();
  const double p3 = a.hi() * b.lo();
  const double p4 = a.hi() * b.hi();
  return outward(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains(0.0)) {
    throw DivisionByZeroInterval("divisor interval contains zero: " + describe(b.lo(), b.hi()));
  }
  const double q1 = a.lo() / b.lo();
  const double q2 = a.lo() / b.hi();
  const double q3 = a.hi() / b.lo();
  const double q4 = a.hi() / b.hi();
  return outward(std::min({q1, q2, q3, q4}), std::max({q1, q2, q3, q4}));
}

Interval operator-(const Interval& a) { return {-a.hi(), -a.lo()}; }

Interval iv_arith(const Interval& a, const Interval& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw DomainError("unknown arithmetic operation");
}

Interval iv_elem(const Interval& a, ElemFn fn) {
  switch (fn) {
    case ElemFn::Sqrt: return sqrt(a);
    case ElemFn::Sin: return sin(a);
    case ElemFn::Cos: return cos(a);
    case ElemFn::Atan: return atan(a);
    case ElemFn::Asin: return asin(a);
  }
  throw DomainError("unknown elementary function");
}

Interval sqrt(const Interval& a) {
  if (a.lo() < 0.0) throw DomainError("sqrt of interval with negative part: " + describe(a.lo(), a.hi()));
  return {std::max(0.0, round_down(std::sqrt(a.lo()))), round_up(std::sqrt(a.hi()))};
}

Interval sin(const Interval& a) { return trig(a, Trig::Sin); }
Interval cos(const Interval& a) { return trig(a, Trig::Cos); }

Interval atan(const Interval& a) {
  const double bound = round_up(0.5 * round_up(kPiLo));
  return {std::max(-bound, round_down(round_down(std::atan(a.lo())))),
          std::min(bound, round_up(round_up(std::atan(a.hi()))))};
}

Interval asin(const Interval& a) {
  if (a.lo() < -1.0 || a.hi() > 1.0) {
    throw DomainError("asin argument outside [-1, 1]: " + describe(a.lo(), a.hi()));
  }
  const double bound = round_up(0.5 * round_up(kPiLo));
  return {std::max(-bound, round_down(round_down(std::asin(a.lo())))),
          std::min(bound, round_up(round_up(std::asin(a.hi()))))};
}

Interval abs(const Interval& a) {
  if (a.lo() >= 0.0) return a;
  if (a.hi() <= 0.0) return -a;
  return {0.0, std::max(-a.lo(), a.hi())};
}

Interval sqr(const Interval& a) {
  const Interval m = abs(a);
  const double lo = m.lo() * m.lo();
  const double hi = m.hi() * m.hi();
  return {std::max(0.0, round_down(lo)), round_up(hi)};
}

Interval pow(const Interval& a, unsigned exponent) {
  Interval result{1.0};
  Interval base = a;
  bool first = true;
  while (exponent != 0) {
    if ((exponent & 1U) != 0) {
      result = first ? base : result * base;
      first = false;
    }
    exponent >>= 1U;
    if (exponent != 0) base = sqr(base);
  }
  return result;
}

Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Interval intersect(const Interval& a, const Interval& b) {
  const double lo = std::max(a.lo(), b.lo());
  const double hi = std::min(a.hi(), b.hi());
  if (lo > hi) {
    throw DomainError("empty intersection of " + describe(a.lo(), a.hi()) + " and " + describe(b.lo(), b.hi()));
  }
  return {lo, hi};
}

Interval pi_interval() { return {kPiLo, round_up(kPiLo)}; }

Interval enclose_decimal(double v) {
  if (std::fabs(v) < 0x1p53 && std::trunc(v) == v) return Interval{v};
  return {round_down(v), round_up(v)};
}

Certainty iv_cert_positive(const Interval& a) {
  if (a.lo() > 0.0) return Certainty::ProvedPositive;
  if (a.hi() <= 0.0) return Certainty::ProvedNonpositive;
  return Certainty::Undecided;
}

const char* to_string(Certainty c) {
  switch (c) {
    case Certainty::ProvedPositive: return "ProvedPositive";
    case Certainty::ProvedNonpositive: return "ProvedNonpositive";
    case Certainty::Undecided: return "Undecided";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Interval& a) {
  const auto flags = os.flags();
  const auto prec = os.precision();
  os << std::setprecision(17) << "[" << a.lo() << ", " << a.hi() << "]";
  os.flags(flags);
  os.precision(prec);
  return os;
}

}  // namespace holder
