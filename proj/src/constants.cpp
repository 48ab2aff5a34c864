#include "holder/constants.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "holder/quadrature.hpp"
#include "holder/special_points.hpp"

namespace holder {

namespace {

constexpr double kPi = 0x1.921fb54442d18p+1;

Interval lit(double v) { return enclose_decimal(v); }

std::string index_detail(int n) { return "n=" + std::to_string(n); }

// a + sqrt(a^2 - 1) for a = (2k + 1) pi / 4: the lower bound for alpha_k
// implied by the quadratic bound on theta_k.
Interval alpha_lower_bound(int k) {
  const Interval a = Interval{2.0 * k + 1.0} * pi_interval() / Interval{4.0};
  return a + sqrt(sqr(a) - Interval{1.0});
}

// pi^2 (1 + 1/P)^2 / P
Interval delta_ratio_bound(const Interval& p) {
  const Interval pi = pi_interval();
  return sqr(pi) * sqr(Interval{1.0} + Interval{1.0} / p) / p;
}

// (pi/2)(1 + 1/P)^3 [1 + r + r^2/5]
Interval g_bound(const Interval& p, const Interval& r) {
  return pi_interval() / Interval{2.0} * pow(Interval{1.0} + Interval{1.0} / p, 3) *
         (Interval{1.0} + r + sqr(r) / Interval{5.0});
}

// (pi/4)(1/P^2)(1 + 1/P)^2 (1 + 2/P)
Interval correction_bound(const Interval& p) {
  return pi_interval() / Interval{4.0} / sqr(p) * sqr(Interval{1.0} + Interval{1.0} / p) *
         (Interval{1.0} + Interval{2.0} / p);
}

template <typename Fn>
CheckResult family(int first, int last, Fn&& make) {
  std::vector<CheckResult> items;
  std::vector<int> indices;
  for (int n = first; n <= last; ++n) {
    items.push_back(make(n));
    indices.push_back(n);
  }
  return aggregate(items, "n", indices);
}

}  // namespace

double i_n_closed(int n) {
  const double a = alpha_point(n);
  const double b = alpha_point(n + 1);
  const double factor = 1.0 + (b * a - 1.0) / ((1.0 + b * b) * (1.0 + a * a));
  return 0.1 * (std::pow(b, 5) - std::pow(a, 5)) + 0.25 * (b - a) * factor;
}

double i_n_quad(int n, double tol) {
  if (!(tol >= 1e-14 && tol <= 1e-6)) throw DomainError("quadrature tolerance outside [1e-14, 1e-6]");
  const auto integrand = [](double u) {
    const double s = std::sin(u);
    return u * u * u * u * s * s;
  };
  return simpson(integrand, alpha_point(n), alpha_point(n + 1), tol).value;
}

double chain_constant(int n) {
  const double a = alpha_point(n);
  const double b = alpha_point(n + 1);
  const double gap = 1.0 / a - 1.0 / b;
  return gap * gap * i_n_closed(n) / (kPi * kPi);
}

ConstantsRow c_n(int n, double quad_tol) {
  ConstantsRow row;
  row.n = n;
  row.alpha_n = alpha_point(n);
  row.alpha_np1 = alpha_point(n + 1);
  const double a = row.alpha_n;
  const double b = row.alpha_np1;
  row.delta = b - a;
  row.i_closed = i_n_closed(n);
  row.i_quad = i_n_quad(n, quad_tol);
  row.f_factor = 1.0 + (b * a - 1.0) / ((1.0 + b * b) * (1.0 + a * a));
  const double scale = row.delta * row.delta / (kPi * kPi * a * a * b * b);
  row.g = scale * 0.1 * (std::pow(b, 5) - std::pow(a, 5));
  row.c = scale * (0.1 * (std::pow(b, 5) - std::pow(a, 5)) + 0.25 * row.delta * row.f_factor);

  const double chain = chain_constant(n);
  if (std::fabs(chain - row.c) > 1e-12 * row.c) {
    std::ostringstream os;
    os.precision(17);
    os << "C_" << n << " from its definition (" << row.c << ") disagrees with the Wirtinger chain constant ("
       << chain << ")";
    throw CertificationFailure(os.str());
  }
  return row;
}

ConstantsEnclosure c_n_enclosure(int n) {
  const Interval pi = pi_interval();
  const Interval a = alpha_iv(n);
  const Interval b = alpha_iv(n + 1);
  const Interval one{1.0};

  ConstantsEnclosure e;
  e.n = n;
  e.product = a * b;
  e.delta = intersect(b - a, pi + theta_iv(n) - theta_iv(n + 1));
  e.delta_ratio = sqr(e.delta) / e.product;
  const Interval scale = sqr(e.delta) / (sqr(pi) * sqr(e.product));
  const Interval fifth_power_gap = Interval{5.0} * sqr(e.product) * e.delta +
                                   Interval{5.0} * e.product * pow(e.delta, 3) + pow(e.delta, 5);
  e.g = scale * fifth_power_gap / Interval{10.0};
  e.f_factor = one + (e.product - one) / ((one + sqr(b)) * (one + sqr(a)));
  e.correction = scale * e.delta * e.f_factor / Interval{4.0};
  e.c = e.g + e.correction;
  return e;
}

std::vector<CheckResult> check_lemma_1_4(int n_max) {
  if (n_max < 1 || n_max > kMaxIndex) throw DomainError("n_max outside [1, " + std::to_string(kMaxIndex) + "]");
  const Interval pi = pi_interval();
  const ConstantsEnclosure e1 = c_n_enclosure(1);
  const ConstantsEnclosure e2 = c_n_enclosure(2);
  const Interval p23 = alpha_iv(2) * alpha_iv(3);

  std::vector<CheckResult> out;
  out.push_back(certify_strict("lemma1.4.a1a2_gt_7pi2_2", "Lemma 1.4 (proof): alpha_1 alpha_2 > 7 pi^2 / 2",
                               e1.product - Interval{3.5} * sqr(pi)));
  out.push_back(certify_strict("lemma1.4.a1a2_gt_34.6", "Lemma 1.4 (proof): alpha_1 alpha_2 > 34.6",
                               e1.product - lit(34.6)));
  out.push_back(certify_strict("lemma1.4.a2a3_gt_84.22", "Lemma 1.4 (proof): alpha_2 alpha_3 > 84.22",
                               p23 - lit(84.22)));

  out.push_back(certify_strict("lemma1.4.alpha1_lower_4.4896",
                               "Lemma 1.4 (proof): 3pi/4 + sqrt((3pi/4)^2 - 1) > 4.4896",
                               alpha_lower_bound(1) - lit(4.4896)));
  out.push_back(certify_strict("lemma1.4.alpha2_lower_7.7245",
                               "Lemma 1.4 (proof): 5pi/4 + sqrt((5pi/4)^2 - 1) > 7.7245",
                               alpha_lower_bound(2) - lit(7.7245)));
  out.push_back(certify_strict("lemma1.4.alpha3_lower_10.9038",
                               "Lemma 1.4 (proof): 7pi/4 + sqrt((7pi/4)^2 - 1) > 10.9038",
                               alpha_lower_bound(3) - lit(10.9038)));
  out.push_back(certify_strict("lemma1.4.product_34.6", "Lemma 1.4 (proof): 4.4896 * 7.7245 > 34.6",
                               lit(4.4896) * lit(7.7245) - lit(34.6)));
  out.push_back(certify_strict("lemma1.4.product_84.22", "Lemma 1.4 (proof): 7.7245 * 10.9038 > 84.22",
                               lit(7.7245) * lit(10.9038) - lit(84.22)));

  out.push_back(certify_strict("lemma1.4.delta_ratio_n1", "Lemma 1.4 (proof): delta_1^2/(alpha_1 alpha_2) < 0.302",
                               lit(0.302) - e1.delta_ratio, index_detail(1)));
  out.push_back(certify_strict("lemma1.4.delta_ratio_bound_34.6",
                               "Lemma 1.4 (proof): pi^2 (1 + 1/34.6)^2 / 34.6 < 0.302",
                               lit(0.302) - delta_ratio_bound(lit(34.6))));
  out.push_back(certify_strict("lemma1.4.delta_ratio_bound_84.22",
                               "Lemma 1.4 (proof): pi^2 (1 + 1/84.22)^2 / 84.22 < 0.12",
                               lit(0.12) - delta_ratio_bound(lit(84.22))));
  out.push_back(certify_strict("lemma1.4.g1_lt_2.259", "Lemma 1.4 (proof): G_1 < 2.259", lit(2.259) - e1.g,
                               index_detail(1)));
  out.push_back(certify_strict("lemma1.4.g_bound_34.6",
                               "Lemma 1.4 (proof): (pi/2)(1 + 1/34.6)^3 [1 + 0.302 + 0.302^2/5] < 2.259",
                               lit(2.259) - g_bound(lit(34.6), lit(0.302))));
  out.push_back(certify_strict("lemma1.4.g_bound_84.22",
                               "Lemma 1.4 (proof): (pi/2)(1 + 1/84.22)^3 [1 + 0.12 + 0.12^2/5] < 1.83",
                               lit(1.83) - g_bound(lit(84.22), lit(0.12))));
  out.push_back(certify_strict("lemma1.4.correction_n1", "Lemma 1.4 (proof): correction term for n=1 < 0.00080",
                               lit(0.0008) - e1.correction, index_detail(1)));
  out.push_back(certify_strict("lemma1.4.correction_bound_34.6",
                               "Lemma 1.4 (proof): (pi/4)(1/34.6^2)(1 + 1/34.6)^2 (1 + 2/34.6) < 0.00080",
                               lit(0.0008) - correction_bound(lit(34.6))));
  out.push_back(certify_strict("lemma1.4.correction_bound_84.22",
                               "Lemma 1.4 (proof): (pi/4)(1/84.22^2)(1 + 1/84.22)^2 (1 + 2/84.22) < 0.00012",
                               lit(0.00012) - correction_bound(lit(84.22))));
  out.push_back(certify_strict("lemma1.4.c1_lt_2.26", "Lemma 1.4: C_1 < 2.26", lit(2.26) - e1.c, index_detail(1)));
  out.push_back(certify_strict("lemma1.4.c1_lt_2.25980", "Lemma 1.4 (proof): C_1 < 2.259 + 0.00080 = 2.25980",
                               lit(2.2598) - e1.c, index_detail(1)));
  out.push_back(certify_strict("lemma1.4.c2_lt_1.83012", "Lemma 1.4 (proof): C_2 < 1.83 + 0.00012 = 1.83012",
                               lit(1.83012) - e2.c, index_detail(2)));

  out.push_back(family(1, n_max, [&](int n) {
    const ConstantsEnclosure e = c_n_enclosure(n);
    return certify_strict("lemma1.4.delta_upper", "Lemma 1.4 (proof): delta_n < pi (1 + 1/(alpha_n alpha_{n+1}))",
                          // delta_n - pi = theta_n - theta_{n+1}; compare without re-adding pi.
                          pi / e.product - (theta_iv(n) - theta_iv(n + 1)), index_detail(n));
  }));
  out.push_back(family(1, n_max, [&](int n) {
    const ConstantsEnclosure e = c_n_enclosure(n);
    return certify_strict("lemma1.4.f_upper", "Lemma 1.4 (proof): F_n < (2 + alpha_n alpha_{n+1})/(1 + alpha_n alpha_{n+1})",
                          (Interval{2.0} + e.product) / (Interval{1.0} + e.product) - e.f_factor, index_detail(n));
  }));
  if (n_max >= 2) {
    out.push_back(family(2, n_max, [&](int n) {
      return certify_strict("lemma1.4.product_gt_84.22", "Lemma 1.4 (proof): alpha_n alpha_{n+1} > 84.22 for n > 1",
                            c_n_enclosure(n).product - lit(84.22), index_detail(n));
    }));
    out.push_back(family(2, n_max, [&](int n) {
      return certify_strict("lemma1.4.delta_ratio", "Lemma 1.4 (proof): delta_n^2/(alpha_n alpha_{n+1}) < 0.12 for n > 1",
                            lit(0.12) - c_n_enclosure(n).delta_ratio, index_detail(n));
    }));
    out.push_back(family(2, n_max, [&](int n) {
      return certify_strict("lemma1.4.g_lt_1.83", "Lemma 1.4 (proof): G_n < 1.83 for n > 1",
                            lit(1.83) - c_n_enclosure(n).g, index_detail(n));
    }));
    out.push_back(family(2, n_max, [&](int n) {
      return certify_strict("lemma1.4.correction", "Lemma 1.4 (proof): correction term < 0.00012 for n > 1",
                            lit(0.00012) - c_n_enclosure(n).correction, index_detail(n));
    }));
    out.push_back(family(2, n_max, [&](int n) {
      return certify_strict("lemma1.4.c_lt_1.83012", "Lemma 1.4 (proof): C_n < 1.83012 for n > 1",
                            lit(1.83012) - c_n_enclosure(n).c, index_detail(n));
    }));
    out.push_back(family(2, n_max, [&](int n) {
      return certify_strict("lemma1.4.c_lt_2", "Lemma 1.4: C_n < 2 for n > 1", Interval{2.0} - c_n_enclosure(n).c,
                            index_detail(n));
    }));
  }
  return out;
}

}  // namespace holder
