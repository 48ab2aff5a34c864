#include <doctest.h>

#include <cmath>
#include <random>

#include "holder/errors.hpp"
#include "holder/holder_core.hpp"
#include "holder/special_points.hpp"
#include "support.hpp"

using holder::Interval;
using holder::Verdict;

TEST_CASE("f and derivatives at special points") {
  CHECK(holder::df(1 / (2 * M_PI)) == doctest::Approx(-2 * M_PI).epsilon(1e-14));
  CHECK(holder::f(2 / M_PI) == doctest::Approx(2 / M_PI).epsilon(1e-15));
  CHECK(holder::df(2 / M_PI) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(holder::ddf(1 / M_PI) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(holder::f(0.0), holder::DomainError);
  CHECK_THROWS_AS(holder::df(-1.0), holder::DomainError);
  CHECK_THROWS_AS(holder::f(Interval(0.0, 1.0)), holder::DomainError);
  CHECK_THROWS_AS(holder::f(Interval(1e-7, 1e-6)), holder::ArgumentTooLarge);
  CHECK_NOTHROW(holder::f(Interval(1.01e-6, 2e-6)));
}

TEST_CASE("interval forms enclose the point forms") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(1e-3, 10.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = d(rng);
    const long double u = 1.0L / x;
    const long double fx = x * std::sin(u);
    const long double dfx = std::sin(u) - u * std::cos(u);
    const long double ddfx = -u * u * u * std::sin(u);
    REQUIRE(test_support::encloses(holder::f(Interval{x}), fx));
    REQUIRE(test_support::encloses(holder::df(Interval{x}), dfx));
    REQUIRE(test_support::encloses(holder::ddf(Interval{x}), ddfx));
  }
}

TEST_CASE("derivatives match central differences") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(1e-3, 10.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = d(rng);
    // Step well below the local oscillation length 2 pi x^2.
    const double h = 1e-4 * x * x;
    const double fd1 = (holder::f(x + h) - holder::f(x - h)) / (2 * h);
    const double fd2 = (holder::df(x + h) - holder::df(x - h)) / (2 * h);
    // Scale of the terms that make up each derivative, to absorb cancellation at zeros.
    const double s1 = 1.0 + 1.0 / x;
    const double s2 = 1.0 / (x * x * x);
    CAPTURE(x);
    REQUIRE(std::fabs(fd1 - holder::df(x)) <= 1e-6 * s1);
    REQUIRE(std::fabs(fd2 - holder::ddf(x)) <= 1e-6 * s2);
  }
}

TEST_CASE("sign structure") {
  for (int n = 1; n <= 100; ++n) {
    CAPTURE(n);
    CHECK(std::fabs(holder::df(1 / holder::alpha_point(n))) <= 1e-10);
    const double z = 1 / (n * M_PI);
    CHECK(holder::ddf(z * (1 - 1e-6)) * holder::ddf(z * (1 + 1e-6)) < 0);
  }
}

TEST_CASE("quotient examples") {
  const holder::QuotientRecord far = holder::quotient(2 / M_PI, 1e9);
  CHECK(far.q == doctest::Approx(std::fabs(1 - 2 / M_PI) / std::sqrt(1e9)).epsilon(1e-6));
  CHECK(far.x < far.y);
  CHECK(far.interval_index == 0);
  const holder::QuotientRecord near0 = holder::quotient(2 / M_PI, 1e-12);
  CHECK(near0.x == 1e-12);
  CHECK(near0.q == doctest::Approx(std::sqrt(2 / M_PI)).epsilon(1e-9));
  CHECK(near0.interval_index == -1);
  CHECK_THROWS_AS(holder::quotient(1.0, 1.0), holder::DomainError);
  CHECK_THROWS_AS(holder::quotient(-1.0, 1.0), holder::DomainError);
  CHECK_THROWS_AS(holder::quotient(1.0, 2.0, 0.6), holder::DomainError);
  CHECK(holder::quotient(1.0, 2.0, 0.4).q > 0.0);
  CHECK(holder::quotient(0.2, 0.21).interval_index == 1);
  CHECK(holder::quotient(0.2, 0.3).interval_index == -1);
}

TEST_CASE("piece index") {
  CHECK(holder::piece_index(1 / M_PI) == 0);
  CHECK(holder::piece_index(1 / (2 * M_PI)) == 1);
  CHECK(holder::piece_index(2 / M_PI) == 0);
  CHECK(holder::piece_index(1 / holder::alpha_point(1)) == 0);
  CHECK(holder::piece_index(std::nextafter(1 / holder::alpha_point(1), 0.0)) == 1);
  CHECK(holder::piece_index(1 / holder::alpha_point(2)) == 1);
  CHECK(holder::piece_index(1 / (57.3 * M_PI)) == 56);
  CHECK(holder::piece_index(1 / (57.9 * M_PI)) == 57);
  CHECK(holder::piece_index(1e-9) == -1);
  for (int m = 1; m <= 300; ++m) {
    const auto [a, b] = holder::piece_bounds(m);
    // Shared endpoints may land on either neighbour after the reciprocal.
    const int at_a = holder::piece_index(a);
    CHECK((at_a == m || at_a == m + 1));
    CHECK(holder::piece_index(0.5 * (a + b)) == m);
  }
}

TEST_CASE("Wirtinger inequality on J_n") {
  for (int n : {1, 2, 10, 50}) {
    CAPTURE(n);
    CHECK(holder::wirtinger_check(n).verdict == Verdict::Pass);
  }
  const holder::CheckResult eq = holder::wirtinger_equality_check(0.0, 1.0);
  CHECK(eq.verdict == Verdict::Pass);
  CHECK(eq.margin.lo() > 0.0);
  CHECK(holder::wirtinger_equality_check(0.3, 2.7).verdict == Verdict::Pass);
}

TEST_CASE("envelope next to 1/pi") {
  const auto checks = holder::check_prop_2_3();
  CHECK(checks.size() == 6);
  for (const auto& c : checks) {
    CAPTURE(c.id);
    CAPTURE(c.detail);
    CHECK(c.verdict == Verdict::Pass);
  }
  CHECK(holder::f(2.0) == doctest::Approx(0.958851077208406).epsilon(1e-12));
  CHECK(std::sqrt(2 * (2 - 1 / M_PI)) == doctest::Approx(1.834).epsilon(1e-3));
  const double x = 1 / M_PI + 0.51;
  CHECK(holder::f(x) < 1.0);
  CHECK(std::sqrt(2 * (x - 1 / M_PI)) > 1.0);
  holder::Prop23Options small;
  small.x_max = 1.0;
  small.samples = 100;
  CHECK(holder::check_prop_2_3(small).size() == 6);
  small.x_max = 0.4;
  CHECK(holder::check_prop_2_3(small).size() == 4);
  small.x_max = 0.3;
  CHECK_THROWS_AS(holder::check_prop_2_3(small), holder::DomainError);
}

TEST_CASE("image nesting") {
  const auto checks = holder::check_nesting(100);
  REQUIRE(checks.size() == 3);
  for (const auto& c : checks) CHECK(c.verdict == Verdict::Pass);
  CHECK(std::sin(holder::theta_point(2)) < std::sin(holder::theta_point(1)));
  CHECK(holder::f(1 / holder::alpha_point(1)) == doctest::Approx(-std::sin(holder::theta_point(1))).epsilon(1e-12));
}

TEST_CASE("remap") {
  SUBCASE("same piece is the identity") {
    const holder::RemapResult r = holder::remap(0.2, 0.21);
    CHECK(r.x == 0.2);
    CHECK(r.y == 0.21);
    CHECK(r.piece == 1);
  }
  SUBCASE("x = 1/alpha_3, y = 1/pi") {
    const double x = 1 / holder::alpha_point(3);
    const double y = 1 / M_PI;
    const holder::RemapResult r = holder::remap(x, y);
    CHECK(std::fabs(holder::f(r.x) - holder::f(x)) <= 1e-12);
    CHECK(std::fabs(holder::f(r.y) - holder::f(y)) <= 1e-12);
    CHECK(r.y - r.x < y - x);
    CHECK(x <= r.x);
    CHECK(r.y <= y);
    // The first zero of f right of x is 1/(3 pi), in J_2.
    CHECK(r.piece == 2);
    CHECK(r.y == doctest::Approx(1 / (3 * M_PI)).epsilon(1e-12));
  }
  SUBCASE("random cross-piece pairs") {
    std::mt19937_64 rng(2024);
    const double lo = 1 / holder::alpha_point(60);
    // Log-uniform so that the small pieces are hit as often as J_0.
    std::uniform_real_distribution<double> d(std::log(lo), std::log(3.0));
    int cross = 0;
    for (int i = 0; i < 10000; ++i) {
      double x = std::exp(d(rng));
      double y = std::exp(d(rng));
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      const holder::QuotientRecord before = holder::quotient(x, y);
      if (before.interval_index >= 0) continue;
      ++cross;
      const holder::RemapResult r = holder::remap(x, y);
      const auto [a, b] = r.piece >= 1 ? holder::piece_bounds(r.piece) : std::pair{1 / holder::alpha_point(1), 3.0};
      REQUIRE(r.x >= a);
      REQUIRE(r.y <= b);
      REQUIRE(x <= r.x);
      REQUIRE(r.x < r.y);
      REQUIRE(r.y <= y);
      const double num = std::fabs(holder::f(y) - holder::f(x));
      const double num2 = std::fabs(holder::f(r.y) - holder::f(r.x));
      REQUIRE(std::fabs(num - num2) <= 1e-10);
      REQUIRE(holder::quotient(r.x, r.y).q >= before.q - 1e-10);
    }
    CHECK(cross > 5000);
  }
  CHECK_THROWS_AS(holder::remap(0.3, 0.2), holder::DomainError);
  CHECK_THROWS_AS(holder::remap(1e-9, 0.2), holder::DomainError);
}
