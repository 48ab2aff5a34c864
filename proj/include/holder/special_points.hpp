#pragma once

#include <vector>

#include "holder/check.hpp"
#include "holder/interval.hpp"

namespace holder {

// Largest root index served by the certified root table. One extra index
// (kMaxIndex + 1) is available so that J_n = [1/alpha_{n+1}, 1/alpha_n) is
// defined for every n <= kMaxIndex.
inline constexpr int kMaxIndex = 10000;

// Certified location of alpha_n, the root of phi(t) = sin t - t cos t in
// (n pi, n pi + pi/2), and of theta_n = n pi + pi/2 - alpha_n.
struct RootCertificate {
  int n = 0;
  // (-1)^n phi is certified negative at bracket.lo and positive at bracket.hi.
  Interval bracket;
  // psi(theta) = cos theta - (A - theta) sin theta, A = (n + 1/2) pi, is
  // certified positive at theta_bracket.lo and negative at theta_bracket.hi.
  // psi(theta) = (-1)^n phi(A - theta), so this is the same root measured
  // from the right end, where relative precision is not lost to n pi.
  Interval theta_bracket;
  double alpha = 0.0;
  double theta = 0.0;
  // |alpha tan(theta) - 1|
  double residual = 0.0;

  // bracket intersected with (n + 1/2) pi - theta_bracket.
  [[nodiscard]] Interval alpha_enclosure() const;
};

double phi(double t);
Interval phi_iv(const Interval& t);

// (n + 1/2) pi as an enclosure.
Interval half_odd_pi(int n);

// Width target used by find_alpha for the alpha bracket: 1e-12, or 8 ulps of
// alpha_n once alpha_n is so large that 1e-12 is below its ulp.
double alpha_width_target(int n);

// Memoized and deterministic. Throws DomainError for n outside [1, kMaxIndex + 1].
const RootCertificate& find_alpha(int n);

// Uncached variant with an explicit alpha-bracket width target (>= 1e-15).
RootCertificate certify_root(int n, double width);

// Point values for convenience.
inline double alpha_point(int n) { return find_alpha(n).alpha; }
inline double theta_point(int n) { return find_alpha(n).theta; }
Interval alpha_iv(int n);
Interval theta_iv(int n);

// theta_n < 1/alpha_n, 1/alpha_n < 1/(n pi), theta_n < (1 + theta_n^2)/(n pi + pi/2),
// theta_n < (2n+1)pi/4 - sqrt(((2n+1)pi/4)^2 - 1).
std::vector<CheckResult> check_lemma_1_1(int n);

// theta_1 < pi/14.
CheckResult check_theta1_remark();

// theta_n > sin theta_n > 1/(n pi + pi/2), theta_n > eta_n = asin(1/(n pi + pi/2)),
// and (-1)^n phi(n pi + pi/2 - eta_n) > 0.
std::vector<CheckResult> check_lemma_1_2(int n);

// 0 < theta_n - theta_{n+1} < pi / (alpha_n alpha_{n+1}).
std::vector<CheckResult> check_lemma_1_3(int n);

struct Lemma15Options {
  double left = 0x1p-30;
  long max_boxes = 1'000'000;
};

// sin t - t cos t - t^3/3 < 0 on (0, pi/2): adaptive subdivision over
// [left, pi/2] plus an alternating-series check on (0, left].
// Throws SubdivisionBudgetExceeded when the box budget runs out.
std::vector<CheckResult> check_lemma_1_5(const Lemma15Options& options = {});

}  // namespace holder
