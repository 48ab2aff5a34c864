#include "holder/special_points.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>

namespace holder {

namespace {

constexpr double kPi = 0x1.921fb54442d18p+1;
// pi - kPi, to double precision.
constexpr double kPiTail = 0x1.1a62633145c07p-53;

void require_index(int n) {
  if (n < 1 || n > kMaxIndex + 1) {
    throw DomainError("root index " + std::to_string(n) + " outside [1, " + std::to_string(kMaxIndex + 1) + "]");
  }
}

int sign_of(const Interval& v) {
  if (v.lo() > 0.0) return 1;
  if (v.hi() < 0.0) return -1;
  return 0;
}

// Shrinks [lo, hi] while keeping a certified sign change: sign_at(lo) ==
// lo_sign and sign_at(hi) == -lo_sign. When the midpoint is undecided the
// root is within rounding noise of it; the bracket then collapses to the
// smallest certified window around the midpoint.
template <typename SignAt>
void bisect_bracket(double& lo, double& hi, double width, int lo_sign, SignAt sign_at) {
  for (int iter = 0; iter < 200 && hi - lo > width; ++iter) {
    const double m = lo + 0.5 * (hi - lo);
    if (m <= lo || m >= hi) return;
    const int s = sign_at(m);
    if (s == lo_sign) {
      lo = m;
      continue;
    }
    if (s == -lo_sign) {
      hi = m;
      continue;
    }
    for (double delta = std::max(0.25 * width, ulp(m)); delta < hi - lo; delta *= 2.0) {
      const double l = std::max(lo, m - delta);
      const double h = std::min(hi, m + delta);
      const bool left_ok = l == lo || sign_at(l) == lo_sign;
      const bool right_ok = h == hi || sign_at(h) == -lo_sign;
      if (left_ok && right_ok) {
        lo = l;
        hi = h;
        break;
      }
    }
    return;
  }
}

// psi(theta) = cos theta - (A - theta) sin theta for an enclosure A of (n + 1/2) pi.
Interval psi(const Interval& a, const Interval& theta) { return cos(theta) - (a - theta) * sin(theta); }

std::string index_detail(int n) { return "n=" + std::to_string(n); }

}  // namespace

Interval RootCertificate::alpha_enclosure() const {
  return intersect(bracket, half_odd_pi(n) - theta_bracket);
}

double phi(double t) { return std::sin(t) - t * std::cos(t); }

Interval phi_iv(const Interval& t) { return sin(t) - t * cos(t); }

Interval half_odd_pi(int n) { return Interval{n + 0.5} * pi_interval(); }

double alpha_width_target(int n) { return std::max(1e-12, 8.0 * ulp((n + 0.5) * kPi)); }

RootCertificate certify_root(int n, double width) {
  require_index(n);
  if (!(width >= 1e-15)) throw DomainError("root bracket width target below 1e-15");

  RootCertificate cert;
  cert.n = n;
  const Interval pi = pi_interval();
  const Interval a_enc = half_odd_pi(n);
  const double parity = (n % 2 == 0) ? 1.0 : -1.0;

  // (-1)^n phi goes from -n pi at n pi up to 1 at n pi + pi/2.
  auto signed_phi = [&](double t) { return sign_of(Interval{parity} * phi_iv(Interval{t})); };
  double lo = round_up((Interval{static_cast<double>(n)} * pi).hi());
  double hi = round_down(a_enc.lo());
  if (signed_phi(lo) != -1 || signed_phi(hi) != 1) {
    throw CertificationFailure("no certified sign change of phi on the initial bracket for n=" + std::to_string(n));
  }
  bisect_bracket(lo, hi, width, -1, signed_phi);
  cert.bracket = Interval{lo, hi};

  auto signed_psi = [&](double t) { return sign_of(psi(a_enc, Interval{t})); };
  double tlo = 0.5 / a_enc.hi();
  double thi = std::min(1.5, 1.5 / a_enc.lo());
  if (signed_psi(tlo) != 1 || signed_psi(thi) != -1) {
    throw CertificationFailure("no certified sign change of psi on the initial bracket for n=" + std::to_string(n));
  }
  bisect_bracket(tlo, thi, 0.0, 1, signed_psi);
  cert.theta_bracket = Interval{tlo, thi};

  // One Newton polish on psi with A carried as a double-double.
  const double m = n + 0.5;
  const double a_hi = m * kPi;
  const double a_lo = std::fma(m, kPi, -a_hi) + m * kPiTail;
  double theta = cert.theta_bracket.mid();
  {
    const double span = (a_hi - theta) + a_lo;
    const double value = std::cos(theta) - span * std::sin(theta);
    const double slope = -span * std::cos(theta);
    const double next = theta - value / slope;
    if (cert.theta_bracket.contains(next)) theta = next;
  }
  cert.theta = theta;
  cert.alpha = a_hi + (a_lo - theta);
  cert.residual = std::fabs(((a_hi - theta) + a_lo) * std::tan(theta) - 1.0);

  const Interval alpha_enc = cert.alpha_enclosure();  // throws if the two certificates disagree
  if (!alpha_enc.contains(cert.alpha)) cert.alpha = alpha_enc.mid();
  if (cert.bracket.width() > std::max(width, alpha_width_target(n)) || !(cert.theta > 0.0) ||
      !(cert.theta < 0.5 * kPi) || !(cert.residual <= 1e-10)) {
    std::ostringstream os;
    os << "root certificate for n=" << n << " violates its invariants: bracket " << cert.bracket << ", theta "
       << cert.theta << ", residual " << cert.residual;
    throw CertificationFailure(os.str());
  }
  return cert;
}

const RootCertificate& find_alpha(int n) {
  require_index(n);
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const RootCertificate>> table;
  {
    std::lock_guard lock(mutex);
    if (auto it = table.find(n); it != table.end()) return *it->second;
  }
  auto cert = std::make_unique<const RootCertificate>(certify_root(n, alpha_width_target(n)));
  std::lock_guard lock(mutex);
  // First writer wins; certify_root is deterministic so losers computed the same bits.
  auto [it, inserted] = table.try_emplace(n, std::move(cert));
  return *it->second;
}

Interval alpha_iv(int n) { return find_alpha(n).alpha_enclosure(); }

Interval theta_iv(int n) { return find_alpha(n).theta_bracket; }

std::vector<CheckResult> check_lemma_1_1(int n) {
  const Interval theta = theta_iv(n);
  const Interval alpha = alpha_iv(n);
  const Interval pi = pi_interval();
  const Interval a_enc = half_odd_pi(n);
  const Interval quarter = Interval{2.0 * n + 1.0} * pi / Interval{4.0};
  const Interval one{1.0};

  std::vector<CheckResult> out;
  out.push_back(certify_strict("lemma1.1.theta_lt_inv_alpha", "Lemma 1.1: theta_n < 1/alpha_n",
                               one / alpha - theta, index_detail(n)));
  out.push_back(certify_strict("lemma1.1.inv_alpha_lt_inv_npi", "Lemma 1.1: 1/alpha_n < 1/(n pi)",
                               one / (Interval{static_cast<double>(n)} * pi) - one / alpha, index_detail(n)));
  out.push_back(certify_strict("lemma1.1.theta_lt_quadratic",
                               "Lemma 1.1: theta_n < (1 + theta_n^2)/(n pi + pi/2)",
                               (one + sqr(theta)) / a_enc - theta, index_detail(n)));
  out.push_back(certify_strict("lemma1.1.theta_lt_root_bound",
                               "Lemma 1.1: theta_n < (2n+1)pi/4 - sqrt(((2n+1)pi/4)^2 - 1)",
                               quarter - sqrt(sqr(quarter) - one) - theta, index_detail(n)));
  return out;
}

CheckResult check_theta1_remark() {
  return certify_strict("lemma1.1.theta1_lt_pi_over_14", "Lemma 1.1 remark: theta_1 < pi/14",
                        pi_interval() / Interval{14.0} - theta_iv(1), index_detail(1));
}

std::vector<CheckResult> check_lemma_1_2(int n) {
  const Interval theta = theta_iv(n);
  const Interval a_enc = half_odd_pi(n);
  const Interval inv = Interval{1.0} / a_enc;
  const Interval eta = asin(inv);
  const Interval sin_theta = sin(theta);

  std::vector<CheckResult> out;
  out.push_back(certify_strict("lemma1.2.theta_gt_sin_theta", "Lemma 1.2: theta_n > sin theta_n",
                               theta - sin_theta, index_detail(n)));
  out.push_back(certify_strict("lemma1.2.sin_theta_gt_inv", "Lemma 1.2: sin theta_n > 1/(n pi + pi/2)",
                               sin_theta - inv, index_detail(n)));
  out.push_back(certify_strict("lemma1.2.theta_gt_eta", "Lemma 1.2: theta_n > arcsin(1/(n pi + pi/2))",
                               theta - eta, index_detail(n)));
  // (-1)^n phi(beta_n) with beta_n = A - eta_n, written in the theta coordinate.
  out.push_back(certify_strict("lemma1.2.phi_beta_positive",
                               "Lemma 1.2 (proof): (-1)^n phi(n pi + pi/2 - eta_n) > 0", psi(a_enc, eta),
                               index_detail(n)));
  return out;
}

std::vector<CheckResult> check_lemma_1_3(int n) {
  const Interval gap = theta_iv(n) - theta_iv(n + 1);
  const Interval bound = pi_interval() / (alpha_iv(n) * alpha_iv(n + 1));
  std::vector<CheckResult> out;
  out.push_back(certify_strict("lemma1.3.theta_decreasing", "Lemma 1.3: 0 < theta_n - theta_{n+1}", gap,
                               index_detail(n)));
  out.push_back(certify_strict("lemma1.3.gap_bound",
                               "Lemma 1.3: theta_n - theta_{n+1} < pi/(alpha_n alpha_{n+1})", bound - gap,
                               index_detail(n)));
  return out;
}

namespace {

// -p(t) = t^3/3 - (sin t - t cos t), evaluated directly.
Interval neg_p_direct(const Interval& t) {
  return pow(t, 3) / Interval{3.0} - (sin(t) - t * cos(t));
}

// sin t - t cos t = sum_{k>=1} (-1)^{k+1} 2k t^{2k+1}/(2k+1)!; for 0 < t <= 1
// the terms decrease in magnitude, so p(t) <= -t^5/30 + t^7/840 and
// -p(t) >= t^5 (1/30 - t^2/840).
Interval neg_p_series_factor(const Interval& t) {
  return Interval{1.0} / Interval{30.0} - sqr(t) / Interval{840.0};
}

}  // namespace

std::vector<CheckResult> check_lemma_1_5(const Lemma15Options& options) {
  const double right = round_up((pi_interval() / Interval{2.0}).hi());
  std::vector<Interval> stack{Interval{options.left, right}};
  long processed = 0;
  long by_series = 0;
  Interval tightest{1.0};
  while (!stack.empty()) {
    const Interval box = stack.back();
    stack.pop_back();
    if (++processed > options.max_boxes) {
      throw SubdivisionBudgetExceeded("Lemma 1.5 subdivision exceeded " + std::to_string(options.max_boxes) +
                                      " boxes");
    }
    Interval margin = neg_p_direct(box);
    if (margin.lo() <= 0.0 && box.hi() <= 1.0) {
      const Interval series = pow(box, 5) * neg_p_series_factor(box);
      if (series.lo() > 0.0) {
        margin = series;
        ++by_series;
      }
    }
    if (margin.lo() > 0.0) {
      if (margin.lo() < tightest.lo()) tightest = margin;
      continue;
    }
    const double m = box.mid();
    if (m <= box.lo() || m >= box.hi()) {
      tightest = margin;
      stack.clear();
      break;
    }
    stack.emplace_back(m, box.hi());
    stack.emplace_back(box.lo(), m);
  }

  std::ostringstream detail;
  detail << processed << " boxes over [" << options.left << ", pi/2], " << by_series
         << " closed by the alternating-series bound";
  std::vector<CheckResult> out;
  out.push_back(certify_strict("lemma1.5.subdivision", "Lemma 1.5: sin t - t cos t < t^3/3 on (0, pi/2)", tightest,
                               detail.str()));
  out.push_back(certify_strict("lemma1.5.series_tail",
                               "Lemma 1.5: analytic tail, -p(t) >= t^5 (1/30 - t^2/840) > 0 on (0, 2^-30]",
                               neg_p_series_factor(Interval{0.0, options.left}),
                               "alternating series with decreasing terms for t <= 1"));
  return out;
}

}  // namespace holder
