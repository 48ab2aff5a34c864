#pragma once

#include <vector>

#include "holder/check.hpp"
#include "holder/interval.hpp"

namespace holder {

// Per-index Wirtinger constants, point values from the certified roots.
struct ConstantsRow {
  int n = 0;
  double alpha_n = 0.0;
  double alpha_np1 = 0.0;
  double delta = 0.0;     // alpha_{n+1} - alpha_n
  double i_closed = 0.0;  // closed form of int_{alpha_n}^{alpha_{n+1}} u^4 sin^2 u du
  double i_quad = 0.0;    // the same integral by quadrature
  double g = 0.0;         // G_n
  double f_factor = 0.0;  // F_n
  double c = 0.0;         // C_n = G_n + correction
};

// Certified enclosures of the same quantities. alpha^5 differences are formed
// through 5 P^2 d + 5 P d^3 + d^5 (P = alpha_n alpha_{n+1}, d = delta) so no
// cancellation occurs.
struct ConstantsEnclosure {
  int n = 0;
  Interval product;      // alpha_n alpha_{n+1}
  Interval delta;
  Interval delta_ratio;  // delta^2 / (alpha_n alpha_{n+1})
  Interval g;
  Interval f_factor;
  Interval correction;   // delta^2/(pi^2 P^2) * delta F / 4
  Interval c;
};

// (1/10)(a'^5 - a^5) + (1/4)(a' - a) [1 + (a' a - 1)/((1 + a'^2)(1 + a^2))].
double i_n_closed(int n);

// Simpson estimate of the same integral; tol must lie in [1e-14, 1e-6].
double i_n_quad(int n, double tol = 1e-12);

// Throws CertificationFailure if C_n from its definition and from
// (1/pi^2)(1/alpha_n - 1/alpha_{n+1})^2 I_n disagree beyond 1e-12 relative.
ConstantsRow c_n(int n, double quad_tol = 1e-12);

// (1/pi^2)(1/alpha_n - 1/alpha_{n+1})^2 I_n, with I_n in closed form.
double chain_constant(int n);

ConstantsEnclosure c_n_enclosure(int n);

// Every numeric bound used to establish C_1 < 2.26 and C_n < 2 (n > 1), with
// the per-index families checked for n up to n_max.
std::vector<CheckResult> check_lemma_1_4(int n_max);

}  // namespace holder
