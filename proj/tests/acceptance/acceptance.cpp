// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail N]...
//
// Without flags the exit status is 0 iff every criterion passes. Each
// --expect-fail N marks a criterion known to fail; the exit status is then 0
// iff exactly the listed criteria fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "holder/checklist.hpp"
#include "holder/constants.hpp"
#include "holder/errors.hpp"
#include "holder/holder_core.hpp"
#include "holder/optimizer.hpp"
#include "holder/report.hpp"
#include "holder/special_points.hpp"

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!note.empty()) note += "; ";
    note += what;
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

const holder::CheckResult* find(const std::vector<holder::CheckResult>& checks, const std::string& id) {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Shared by criteria 1-3.
const holder::VerificationReport& lemma_run() {
  static const holder::VerificationReport rep = [] {
    holder::VerifyConfig cfg;
    cfg.n_max = 200;
    cfg.supremum = false;
    return holder::run_verification(cfg);
  }();
  return rep;
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto& rep = lemma_run();
  const double secs = seconds_since(t0);
  int counted = 0;
  for (const char* prefix : {"lemma1.1.", "lemma1.2.", "lemma1.3.", "lemma1.5."}) {
    int k = 0;
    for (const auto& c : rep.checks) {
      if (!starts_with(c.id, prefix)) continue;
      ++k;
      o.require(c.verdict == holder::Verdict::Pass, c.id + " " + holder::to_string(c.verdict));
    }
    o.require(k > 0, std::string("no checks for ") + prefix);
    counted += k;
  }
  o.require(find(rep.checks, "lemma1.2.phi_beta_positive") != nullptr, "missing phi(beta_n) check");
  o.require(secs < 30.0, "took " + fmt(secs) + " s");
  o.note = std::to_string(counted) + " checks, " + fmt(secs) + " s" + (o.note.empty() ? "" : "; " + o.note);
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto& rep = lemma_run();
  for (const char* id : {"lemma1.4.c1_lt_2.26", "lemma1.4.c_lt_2", "lemma1.4.c2_lt_1.83012"}) {
    const auto* c = find(rep.checks, id);
    o.require(c != nullptr && c->verdict == holder::Verdict::Pass, id);
  }
  for (int n = 2; n <= 200; ++n) o.require(holder::c_n_enclosure(n).c.hi() < 2.0, "C_" + std::to_string(n));
  double worst = 0.0;
  for (int n = 1; n <= 50; ++n) {
    const double closed = holder::i_n_closed(n);
    worst = std::max(worst, std::fabs(holder::i_n_quad(n) - closed) / closed);
  }
  o.require(worst <= 1e-10, "I_n relative error " + fmt(worst));
  if (o.pass) o.note = "C_1 <= " + fmt(holder::c_n_enclosure(1).c.hi()) + ", max I_n rel err " + fmt(worst);
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto& rep = lemma_run();
  for (const char* id : {"lemma1.4.a1a2_gt_34.6", "lemma1.4.a2a3_gt_84.22", "lemma1.4.delta_ratio_n1",
                         "lemma1.4.delta_ratio", "lemma1.4.correction_n1", "lemma1.4.correction"}) {
    const auto* c = find(rep.checks, id);
    o.require(c != nullptr && c->verdict == holder::Verdict::Pass, id);
  }
  const holder::ConstantsEnclosure e1 = holder::c_n_enclosure(1);
  o.require(e1.product.lo() > 34.6, "a1a2");
  o.require(holder::c_n_enclosure(2).product.lo() > 84.22, "a2a3");
  o.require(e1.delta_ratio.hi() < 0.302, "delta_1 ratio");
  o.require(e1.correction.hi() < 0.00080, "correction n=1");
  for (int n = 2; n <= 200; ++n) {
    const holder::ConstantsEnclosure e = holder::c_n_enclosure(n);
    o.require(e.delta_ratio.hi() < 0.12, "delta ratio n=" + std::to_string(n));
    o.require(e.correction.hi() < 0.00012, "correction n=" + std::to_string(n));
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (int n = 1; n <= 50; ++n) {
    const holder::CheckResult c = holder::wirtinger_check(n);
    o.require(c.verdict == holder::Verdict::Pass, "J_" + std::to_string(n));
  }
  o.require(holder::wirtinger_equality_check(0.0, 1.0).verdict == holder::Verdict::Pass, "equality case");
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto checks = holder::check_prop_inequalities();
  for (const auto& c : checks) o.require(c.verdict == holder::Verdict::Pass, c.id);
  // The named landmarks, recomputed independently of the corpus.
  const auto pass = [](const char* expr) {
    return holder::evaluate_item(holder::parse_checklist(std::string("x | x | ") + expr).front()).verdict ==
           holder::Verdict::Pass;
  };
  o.require(pass("abs(df(4/(9*pi))) > pi"), "|f'(4/(9pi))| > pi");
  o.require(pass("(1 + theta(1))^2 < 6/pi"), "(1+theta_1)^2 < 6/pi");
  o.require(pass("1 - 1e-12 < df(2/pi) < 1 + 1e-12"), "f'(2/pi) = 1");
  o.require(pass("df(3/pi) < sqrt(pi/8)"), "f'(3/pi) < sqrt(pi/8)");
  o.note = std::to_string(checks.size()) + " items" + (o.note.empty() ? "" : "; " + o.note);
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const holder::SupremumReport rep = holder::global_sup(200, 8.0, 512);
  const holder::SpotCheck spot = holder::random_pair_check(1'000'000, 20240601, 1 / holder::alpha_point(200), 8.0);
  const double secs = seconds_since(t0);
  o.require(rep.sup_estimate <= std::sqrt(2.0) + 1e-9, "sup " + fmt(rep.sup_estimate));
  o.require(rep.sup_estimate >= std::sqrt(2 / M_PI) - 1e-9, "below witness");
  o.require(spot.violations == 0, std::to_string(spot.violations) + " violations");
  o.require(secs < 120.0, "took " + fmt(secs) + " s");
  o.note = "sup " + fmt(rep.sup_estimate) + ", " + std::to_string(spot.pairs) + " pairs, " + fmt(secs) + " s" +
           (o.note.empty() ? "" : "; " + o.note);
  return o;
}

Outcome criterion7() {
  Outcome o;
  double worst = 0.0;
  for (int n = 1; n <= 10; ++n) {
    const double d = std::fabs(holder::interval_sup(n, 512).sup - holder::brute_grid_oracle(n, 4096).sup);
    worst = std::max(worst, d);
    o.require(d <= 1e-4, "n=" + std::to_string(n) + " differs by " + fmt(d));
  }
  for (int n = 0; n <= 10; ++n) {
    const auto cp = holder::critical_pair(n);
    if (!cp) {
      o.require(false, "no critical pair for n=" + std::to_string(n));
      continue;
    }
    o.require(cp->residual <= 1e-10, "residual n=" + std::to_string(n) + " " + fmt(cp->residual));
  }
  const auto c1 = holder::critical_pair(1);
  if (c1) o.require(c1->record.x < 1 / (2 * M_PI) && 1 / (2 * M_PI) < c1->record.y, "n=1 box");
  const auto c0 = holder::critical_pair(0);
  if (c0) {
    const double x0 = c0->record.x;
    const double y0 = c0->record.y;
    o.require(0.7 / M_PI < x0 && x0 < 4 / (5 * M_PI), "x0 = " + fmt(x0 * M_PI) + "/pi outside (0.7/pi, 0.8/pi)");
    o.require(13 / (8 * M_PI) < y0 && y0 < 1.9 / M_PI, "y0 = " + fmt(y0 * M_PI) + "/pi outside (1.625/pi, 1.9/pi)");
  }
  if (o.pass) o.note = "max grid gap " + fmt(worst);
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(8);
  const double lo = 1 / holder::alpha_point(100);
  std::uniform_real_distribution<double> d(std::log(lo), std::log(8.0));
  int done = 0;
  int failures = 0;
  double worst_num = 0.0;
  while (done < 10000) {
    double x = std::exp(d(rng));
    double y = std::exp(d(rng));
    if (x == y) continue;
    if (x > y) std::swap(x, y);
    if (holder::piece_index(x) == holder::piece_index(y)) continue;
    ++done;
    try {
      const holder::RemapResult r = holder::remap(x, y);
      const double num = std::fabs(holder::f(y) - holder::f(x));
      const double num2 = std::fabs(holder::f(r.y) - holder::f(r.x));
      worst_num = std::max(worst_num, std::fabs(num - num2));
      if (std::fabs(num - num2) > 1e-10) o.require(false, "numerator drift at x=" + fmt(x) + " y=" + fmt(y));
      if (r.y - r.x > y - x) o.require(false, "distance grew at x=" + fmt(x) + " y=" + fmt(y));
      if (holder::quotient(r.x, r.y).q < holder::quotient(x, y).q - 1e-10)
        o.require(false, "quotient dropped at x=" + fmt(x) + " y=" + fmt(y));
    } catch (const holder::RemapFailure& e) {
      ++failures;
    }
  }
  o.require(failures == 0, std::to_string(failures) + " RemapFailure");
  if (o.pass) o.note = std::to_string(done) + " pairs, max numerator drift " + fmt(worst_num);
  return o;
}

Outcome criterion9() {
  Outcome o;
  holder::VerifyConfig cfg;
  const std::string a = holder::render_json(holder::run_verification(cfg));
  const std::string b = holder::render_json(holder::run_verification(cfg));
  o.require(a == b, "outputs differ");
  if (o.pass) o.note = std::to_string(a.size()) + " bytes identical";
  return o;
}

const char* const kTitles[] = {
    "lemma suite (1.1, 1.2, 1.3, 1.5) at n_max 200",
    "C_1 < 2.26, C_n < 2, C_2 < 1.83012, I_n closed form vs quadrature",
    "Lemma 1.4 proof landmarks",
    "Wirtinger on J_1..J_50 and the sine equality case",
    "proposition checklist",
    "global sup at N=200, x_cap=8, resolution 512 and 1e6 random pairs",
    "grid oracle equivalence, stationarity residuals, localization boxes",
    "remap on 1e4 cross-piece pairs",
    "byte-identical JSON reports",
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      expected.insert(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--expect-fail N]...\n", argv[0]);
      return 2;
    }
  }

  const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3,
                                                          criterion4, criterion5, criterion6,
                                                          criterion7, criterion8, criterion9};
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const bool known = expected.count(id) > 0;
    std::printf("%s %d: %s%s%s%s\n", o.pass ? "PASS" : "FAIL", id, kTitles[i], o.note.empty() ? "" : " [",
                o.note.c_str(), o.note.empty() ? "" : "]");
    if (!o.pass && known) std::printf("     (known failure)\n");
    if (o.pass == known) ++unexpected;
    std::fflush(stdout);
  }
  return unexpected == 0 ? 0 : 1;
}
