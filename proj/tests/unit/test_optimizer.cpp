#include <doctest.h>

#include <cmath>

#include "holder/errors.hpp"
#include "holder/optimizer.hpp"
#include "holder/special_points.hpp"

namespace {

double residual(double x, double y) {
  const double d = (holder::f(y) - holder::f(x)) / (y - x);
  return std::max(std::fabs(holder::df(x) - holder::df(y)), std::fabs(holder::df(x) - 0.5 * d));
}

}  // namespace

TEST_CASE("critical pair on J_1") {
  const auto cp = holder::critical_pair(1);
  REQUIRE(cp.has_value());
  const auto& r = cp->record;
  CHECK(r.x == doctest::Approx(0.1353557).epsilon(1e-6));
  CHECK(r.y == doctest::Approx(0.1995902).epsilon(1e-6));
  CHECK(r.q == doctest::Approx(1.229935).epsilon(1e-6));
  CHECK(r.x < 1 / (2 * M_PI));
  CHECK(1 / (2 * M_PI) < r.y);
  CHECK(std::fabs(holder::df(r.x)) <= M_PI);
  CHECK(cp->residual <= 1e-10);
  CHECK(residual(r.x, r.y) <= 1e-10);
  CHECK(r.provenance == holder::Provenance::Newton);
}

TEST_CASE("critical pair on J_0") {
  const auto cp = holder::critical_pair(0);
  REQUIRE(cp.has_value());
  const auto& r = cp->record;
  CHECK(r.x == doctest::Approx(0.23657413).epsilon(1e-6));
  CHECK(r.y == doctest::Approx(0.61514292).epsilon(1e-6));
  CHECK(r.q == doctest::Approx(1.3383624629937).epsilon(1e-10));
  CHECK(holder::df(r.x) > 0.0);
  CHECK(holder::df(r.x) <= M_PI / 2);
  CHECK(residual(r.x, r.y) <= 1e-10);
  CHECK(r.x > 0.7 / M_PI);
  CHECK(r.x < 4 / (5 * M_PI));
  CHECK(r.y > 13 / (8 * M_PI));
  // The converged y0 = 1.9325/pi lies above 1.9/pi (and below 2/pi).
  CHECK(r.y * M_PI == doctest::Approx(1.93253).epsilon(1e-5));
  CHECK(r.y < 2 / M_PI);
}

TEST_CASE("critical pair on J_2") {
  const auto cp = holder::critical_pair(2);
  REQUIRE(cp.has_value());
  CHECK(cp->record.q == doctest::Approx(1.2150322).epsilon(1e-6));
}

TEST_CASE("interval sup dominates its ingredients") {
  for (int n : {1, 2, 5}) {
    CAPTURE(n);
    const holder::PieceSup s = holder::interval_sup(n, 128);
    const auto [a, b] = holder::piece_bounds(n);
    CHECK(s.sup >= holder::quotient(a, b).q);
    const auto cp = holder::critical_pair(n);
    REQUIRE(cp.has_value());
    CHECK(s.sup >= cp->record.q);
    CHECK(s.sup <= std::sqrt(2.0));
    CHECK(s.arg.interval_index == n);
  }
  // Endpoint pair value |sin theta_n + sin theta_{n+1}|/sqrt(1/alpha_n - 1/alpha_{n+1}).
  const double e1 = (std::sin(holder::theta_point(1)) + std::sin(holder::theta_point(2))) /
                    std::sqrt(1 / holder::alpha_point(1) - 1 / holder::alpha_point(2));
  CHECK(e1 == doctest::Approx(1.13267).epsilon(1e-5));
  const auto [a1, b1] = holder::piece_bounds(1);
  CHECK(holder::quotient(a1, b1).q == doctest::Approx(e1).epsilon(1e-12));
  CHECK(holder::interval_sup(1, 512).sup <= std::sqrt(2.26));
  CHECK(holder::interval_sup(2, 512).sup <= std::sqrt(1.83012));
  CHECK_THROWS_AS(holder::interval_sup(1, 32), holder::ConfigError);
  CHECK_THROWS_AS(holder::interval_sup(0, 128), holder::ConfigError);
}

TEST_CASE("brute-force oracle") {
  double prev = 0.0;
  for (int res : {64, 128, 256, 512}) {
    const double v = holder::brute_grid_oracle(1, res).sup;
    CHECK(v >= prev);
    prev = v;
  }
  CHECK(prev <= std::sqrt(2.0));
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(std::fabs(holder::interval_sup(n, 512).sup - holder::brute_grid_oracle(n, 2048).sup) <= 1e-4);
  }
  CHECK_THROWS_AS(holder::brute_grid_oracle(1, (1 << 14) + 1), holder::ConfigError);
}

TEST_CASE("global sup at reduced scale") {
  const holder::SupremumReport rep = holder::global_sup(20, 8.0, 128);
  CHECK(rep.sup_estimate <= std::sqrt(2.0) + 1e-9);
  CHECK(rep.sup_estimate >= std::sqrt(2 / M_PI) - 1e-9);
  CHECK(rep.within_bound);
  CHECK(rep.per_interval.size() == 20);
  CHECK(rep.arg.q == rep.sup_estimate);
  CHECK(rep.sup_estimate >= rep.j0.sup);
  for (const auto& p : rep.per_interval) CHECK(rep.sup_estimate >= p.sup);
  CHECK(rep.per_interval[9].sup <= rep.per_interval[1].sup + 1e-9);
  const auto& m = rep.method_breakdown;
  CHECK(m.grid + m.newton + m.boundary + m.remap == 21);
  CHECK(rep.bound_certificate < std::sqrt(2.0));
  REQUIRE(rep.tail_certificates.size() == 3);
  for (const auto& c : rep.tail_certificates) CHECK(c.verdict == holder::Verdict::Pass);

  CHECK_THROWS_AS(holder::global_sup(0), holder::ConfigError);
  CHECK_THROWS_AS(holder::global_sup(10, 1.0), holder::ConfigError);
  CHECK_THROWS_AS(holder::global_sup(10, 8.0, 32), holder::ConfigError);
  CHECK_THROWS_AS(holder::global_sup(10, 8.0, 128, 0.7), holder::ConfigError);

  const holder::SupremumReport low = holder::global_sup(10, 8.0, 128, 0.4);
  CHECK(std::isfinite(low.sup_estimate));
  CHECK(low.tail_certificates.empty());
  // With x_cap below 7/pi the near-gap tail is not covered.
  const holder::SupremumReport short_cap = holder::global_sup(5, 1.5, 64);
  CHECK(short_cap.tail_certificates.back().verdict == holder::Verdict::Undecided);
}

TEST_CASE("random pairs respect the bound") {
  const holder::SpotCheck s = holder::random_pair_check(1'000'000, 42, 1 / holder::alpha_point(200), 100.0);
  CHECK(s.pairs >= 999'000);
  CHECK(s.violations == 0);
  CHECK(s.worst.q <= std::sqrt(2.0) + 1e-9);
  CHECK_THROWS_AS(holder::random_pair_check(10, 1, 0.0, 1.0), holder::ConfigError);
}
