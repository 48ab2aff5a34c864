#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "holder/errors.hpp"
#include "holder/interval.hpp"
#include "support.hpp"

using holder::Interval;
using test_support::encloses;
using test_support::kPiL;

TEST_CASE("construction rejects bad endpoints") {
  CHECK_THROWS_AS(Interval(2.0, 1.0), holder::DomainError);
  CHECK_THROWS_AS(Interval(std::nan("")), holder::DomainError);
  CHECK_THROWS_AS(Interval(0.0, INFINITY), holder::DomainError);
  CHECK(Interval(1.0, 1.0).is_point());
}

TEST_CASE("arithmetic examples") {
  const Interval s = Interval{1, 2} + Interval{3, 4};
  CHECK(s.contains(Interval{4, 6}));
  const Interval p = Interval{-1, 2} * Interval{3, 4};
  CHECK(p.contains(Interval{-4, 8}));
  CHECK_THROWS_AS(Interval(1.0) / Interval(0, 1), holder::DivisionByZeroInterval);
  CHECK_THROWS_AS(holder::iv_arith(Interval(1.0), Interval(-1, 1), holder::ArithOp::Div),
                  holder::DivisionByZeroInterval);
  // Outward by at least one ulp per endpoint.
  const Interval one_third = Interval{1.0} / Interval{3.0};
  CHECK(one_third.lo() < 1.0 / 3.0);
  CHECK(one_third.hi() > 1.0 / 3.0);
}

TEST_CASE("elementary examples") {
  CHECK(holder::sqrt(Interval{4, 9}).contains(Interval{2, 3}));
  CHECK_THROWS_AS(holder::sqrt(Interval(-1, 1)), holder::DomainError);
  CHECK_THROWS_AS(holder::asin(Interval(0.5, 1.5)), holder::DomainError);

  const Interval half_pi_up{0.0, std::nextafter(M_PI / 2, 4.0)};
  const Interval s = holder::sin(half_pi_up);
  CHECK(s.contains(Interval{0, 1}));
  CHECK(s.hi() == 1.0);
  CHECK(s.lo() >= -1e-300);

  const Interval c = holder::cos(Interval{0.0, std::nextafter(M_PI, 4.0)});
  CHECK(c.contains(Interval{-1, 1}));

  CHECK_THROWS_AS(holder::sin(Interval(0, 2e6)), holder::ArgumentTooLarge);
  CHECK_NOTHROW(holder::sin(Interval(1e6 - 1, 1e6)));
}

TEST_CASE("pi enclosure") {
  const Interval pi = holder::pi_interval();
  CHECK(encloses(pi, kPiL));
  CHECK(pi.width() <= 2 * holder::ulp(M_PI));
  // sin(pi) must straddle zero.
  CHECK(holder::sin(pi).contains(0.0));
}

TEST_CASE("certified sign") {
  CHECK(holder::iv_cert_positive(Interval{0.1, 0.2}) == holder::Certainty::ProvedPositive);
  CHECK(holder::iv_cert_positive(Interval{-1, -0.5}) == holder::Certainty::ProvedNonpositive);
  CHECK(holder::iv_cert_positive(Interval{-0.1, 0.1}) == holder::Certainty::Undecided);
  CHECK(holder::iv_cert_positive(Interval{0.0, 1.0}) == holder::Certainty::Undecided);
  CHECK(holder::iv_cert_positive(Interval{-1.0, 0.0}) == holder::Certainty::ProvedNonpositive);
}

TEST_CASE("decimal literals") {
  CHECK(holder::enclose_decimal(3.0).is_point());
  const Interval tenth = holder::enclose_decimal(0.1);
  CHECK(encloses(tenth, 0.1L));
  CHECK_FALSE(tenth.is_point());
}

TEST_CASE("enclosure property on random inputs") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> wide(-50.0, 50.0);
  std::uniform_real_distribution<double> huge(-1e6, 1e6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int checked = 0;
  for (int i = 0; i < 100000; ++i) {
    const double a = (i % 10 == 0) ? huge(rng) : wide(rng);
    const double b = wide(rng);
    const long double al = a;
    const long double bl = b;
    const Interval ia{a};
    const Interval ib{b};
    REQUIRE(encloses(ia + ib, al + bl));
    REQUIRE(encloses(ia - ib, al - bl));
    REQUIRE(encloses(ia * ib, al * bl));
    if (b != 0.0) REQUIRE(encloses(ia / ib, al / bl));
    REQUIRE(encloses(holder::sin(ia), std::sin(al)));
    REQUIRE(encloses(holder::cos(ia), std::cos(al)));
    REQUIRE(encloses(holder::atan(ia), std::atan(al)));
    REQUIRE(encloses(holder::sqrt(Interval{std::fabs(a)}), std::sqrt(std::fabs(al))));
    const double u = 2.0 * unit(rng) - 1.0;
    REQUIRE(encloses(holder::asin(Interval{u}), std::asin(static_cast<long double>(u))));
    // A random point inside a random interval.
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    const double t = lo + unit(rng) * (hi - lo);
    const Interval box{lo, hi};
    REQUIRE(encloses(holder::sin(box), std::sin(static_cast<long double>(t))));
    REQUIRE(encloses(holder::cos(box), std::cos(static_cast<long double>(t))));
    ++checked;
  }
  CHECK(checked == 100000);
}

TEST_CASE("inclusion monotonicity") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  std::uniform_real_distribution<double> grow(0.0, 2.0);
  for (int i = 0; i < 20000; ++i) {
    const double a0 = d(rng);
    const double a1 = a0 + grow(rng);
    const double b0 = d(rng);
    const double b1 = b0 + grow(rng);
    const Interval a{a0, a1};
    const Interval b{b0, b1};
    const Interval A{a0 - grow(rng), a1 + grow(rng)};
    const Interval B{b0 - grow(rng), b1 + grow(rng)};
    REQUIRE(A.contains(a));
    REQUIRE((A + B).contains(a + b));
    REQUIRE((A - B).contains(a - b));
    REQUIRE((A * B).contains(a * b));
    if (!B.contains(0.0)) REQUIRE((A / B).contains(a / b));
    REQUIRE(holder::sin(A).contains(holder::sin(a)));
    REQUIRE(holder::cos(A).contains(holder::cos(a)));
    REQUIRE(holder::atan(A).contains(holder::atan(a)));
    REQUIRE(holder::sqr(A).contains(holder::sqr(a)));
    REQUIRE(holder::abs(A).contains(holder::abs(a)));
  }
}

TEST_CASE("width control for point operands") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> d(0.01, 100.0);
  for (int i = 0; i < 20000; ++i) {
    const double a = d(rng);
    const double b = d(rng);
    const auto check = [](const Interval& r) { REQUIRE(r.width() <= 4.0 * holder::ulp(r.mid())); };
    check(Interval{a} + Interval{b});
    check(Interval{a} - Interval{b} + Interval{2 * std::max(a, b)});
    check(Interval{a} * Interval{b});
    check(Interval{a} / Interval{b});
    check(holder::sqrt(Interval{a}));
    check(holder::atan(Interval{a}));
  }
}

TEST_CASE("sin and cos widths stay small away from zeros") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(0.0, 40000.0);
  for (int i = 0; i < 20000; ++i) {
    const double t = d(rng);
    const Interval s = holder::sin(Interval{t});
    const Interval c = holder::cos(Interval{t});
    REQUIRE(s.width() <= 4.0 * holder::ulp(1.0));
    REQUIRE(c.width() <= 4.0 * holder::ulp(1.0));
  }
}

TEST_CASE("pow, hull, intersect") {
  CHECK(holder::pow(Interval{-2, 1}, 2).contains(Interval{0, 4}));
  CHECK(holder::pow(Interval{-2, 1}, 2).lo() <= 0.0);
  CHECK(holder::pow(Interval{-2, 1}, 3).contains(Interval{-8, 1}));
  CHECK(holder::pow(Interval{2.0}, 0) == Interval{1.0});
  CHECK(holder::hull(Interval{1, 2}, Interval{5, 6}) == Interval{1, 6});
  CHECK(holder::intersect(Interval{1, 3}, Interval{2, 4}) == Interval{2, 3});
  CHECK_THROWS_AS(holder::intersect(Interval(1, 2), Interval(3, 4)), holder::DomainError);
}

TEST_CASE("printing uses 17 digits") {
  std::ostringstream os;
  os << Interval{0.1, 0.2};
  CHECK(os.str().find("0.10000000000000001") != std::string::npos);
}
