#pragma once

#include <iosfwd>

#include "holder/errors.hpp"

namespace holder {

/**
 * Closed interval [lo, hi] of finite doubles with outward rounding.
 *
 * Every operation returns an interval that contains the exact real image of
 * its operands. Rounding is realized by nudging each computed endpoint one
 * ulp outward (nextafter) instead of switching the FPU rounding mode, so the
 * code is portable and safe to call from any thread.
 *
 * The transcendental kernels (sin, cos, atan, asin) assume the platform libm
 * is accurate to within one ulp on the reduced argument; two outward ulps are
 * applied to absorb it together with the final rounding.
 */
class Interval {
 public:
  constexpr Interval() = default;
  // Point interval. Throws DomainError if v is not finite.
  Interval(double v);  // NOLINT(google-explicit-constructor)
  // Throws DomainError unless lo <= hi and both are finite.
  Interval(double lo, double hi);

  [[nodiscard]] double lo() const { return lo_; }
  [[nodiscard]] double hi() const { return hi_; }
  [[nodiscard]] double width() const { return hi_ - lo_; }
  [[nodiscard]] double mid() const { return lo_ + 0.5 * (hi_ - lo_); }
  // Largest |v| over the interval.
  [[nodiscard]] double mag() const;
  [[nodiscard]] bool is_point() const { return lo_ == hi_; }
  [[nodiscard]] bool contains(double v) const { return lo_ <= v && v <= hi_; }
  [[nodiscard]] bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  [[nodiscard]] bool overlaps(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

// One ulp toward -inf / +inf.
double round_down(double v);
double round_up(double v);
// Distance to the next representable double above |v|.
double ulp(double v);

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
// Throws DivisionByZeroInterval when 0 is in b.
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
inline Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }
inline Interval& operator/=(Interval& a, const Interval& b) { return a = a / b; }

enum class ArithOp { Add, Sub, Mul, Div };
Interval iv_arith(const Interval& a, const Interval& b, ArithOp op);

enum class ElemFn { Sqrt, Sin, Cos, Atan, Asin };
Interval iv_elem(const Interval& a, ElemFn fn);

// Throws DomainError if a.lo() < 0.
Interval sqrt(const Interval& a);
// Valid for |a| <= kReductionLimit; throws ArgumentTooLarge beyond.
Interval sin(const Interval& a);
Interval cos(const Interval& a);
Interval atan(const Interval& a);
// Throws DomainError unless a is inside [-1, 1].
Interval asin(const Interval& a);

Interval abs(const Interval& a);
// Tighter than a * a when a straddles zero.
Interval sqr(const Interval& a);
Interval pow(const Interval& a, unsigned exponent);

Interval hull(const Interval& a, const Interval& b);
// Throws DomainError if the intersection is empty.
Interval intersect(const Interval& a, const Interval& b);

inline constexpr double kReductionLimit = 1e6;

// Two-float enclosure of pi.
Interval pi_interval();

// Enclosure of the exact decimal a literal was rounded from: [v, v] when v is
// an integer below 2^53, otherwise one ulp either side.
Interval enclose_decimal(double v);

enum class Certainty { ProvedPositive, ProvedNonpositive, Undecided };

// ProvedPositive iff a.lo > 0, ProvedNonpositive iff a.hi <= 0.
Certainty iv_cert_positive(const Interval& a);

const char* to_string(Certainty c);

std::ostream& operator<<(std::ostream& os, const Interval& a);

}  // namespace holder
