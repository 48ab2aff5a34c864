#include "holder/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "holder/checklist.hpp"
#include "holder/errors.hpp"
#include "holder/holder_core.hpp"
#include "holder/parallel.hpp"
#include "holder/special_points.hpp"

#ifndef HOLDER_CERT_VERSION
#define HOLDER_CERT_VERSION "0.0.0"
#endif

namespace holder {

using ojson = nlohmann::ordered_json;

std::string tool_version() { return HOLDER_CERT_VERSION; }

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

Summary tally(const std::vector<CheckResult>& checks) {
  Summary s;
  for (const auto& c : checks) {
    ++s.total;
    switch (c.verdict) {
      case Verdict::Pass: ++s.passed; break;
      case Verdict::Fail: ++s.failed; break;
      case Verdict::Undecided: ++s.undecided; break;
    }
  }
  return s;
}

namespace {

using Campaign = std::function<std::vector<CheckResult>()>;

// Calls fn and spreads its wall time over the results it produced.
std::vector<CheckResult> timed(const Campaign& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<CheckResult> out = fn();
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  for (auto& c : out) c.elapsed_ms = ms / static_cast<double>(out.size());
  return out;
}

// Evaluates per_index(n) for n in [first, last] and folds each check id into
// one aggregated record, keeping the order of first appearance.
std::vector<CheckResult> per_index_family(int first, int last,
                                          const std::function<std::vector<CheckResult>(int)>& per_index) {
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::vector<CheckResult>, std::vector<int>>> groups;
  for (int n = first; n <= last; ++n) {
    for (auto& c : timed([&] { return per_index(n); })) {
      auto& g = groups[c.id];
      if (g.first.empty()) order.push_back(c.id);
      g.first.push_back(std::move(c));
      g.second.push_back(n);
    }
  }
  std::vector<CheckResult> out;
  for (const auto& id : order) out.push_back(aggregate(groups[id].first, "n", groups[id].second));
  return out;
}

void append(std::vector<CheckResult>& to, std::vector<CheckResult> from) {
  for (auto& c : from) to.push_back(std::move(c));
}

std::vector<CheckResult> special_points_campaign(int n_max) {
  std::vector<CheckResult> out;
  append(out, per_index_family(1, n_max, check_lemma_1_1));
  append(out, timed([] { return std::vector<CheckResult>{check_theta1_remark()}; }));
  append(out, per_index_family(1, n_max, check_lemma_1_2));
  append(out, per_index_family(1, n_max, check_lemma_1_3));
  append(out, timed([] { return check_lemma_1_5(); }));
  return out;
}

std::vector<CheckResult> constants_campaign(int n_max) {
  std::vector<CheckResult> out = timed([&] { return check_lemma_1_4(n_max); });
  append(out, per_index_family(1, std::min(n_max, 50), [](int n) {
    const double closed = i_n_closed(n);
    const double quad = i_n_quad(n, 1e-13);
    const double rel = std::fabs(closed - quad) / std::fabs(closed);
    return std::vector<CheckResult>{numeric_check("prop2.1.i_closed_form",
                                                  "Proposition 2.1: closed form of I_n matches quadrature to 1e-10",
                                                  1e-10 - rel, "relative difference " + format_double(rel))};
  }));
  append(out, per_index_family(1, n_max, [](int n) {
    const ConstantsRow row = c_n(n);
    const double chain = chain_constant(n);
    const double rel = std::fabs(row.c - chain) / chain;
    return std::vector<CheckResult>{numeric_check(
        "prop2.1.chain_constant", "Proposition 2.1: (1/pi^2)(1/alpha_n - 1/alpha_{n+1})^2 I_n = C_n", 1e-12 - rel,
        "relative difference " + format_double(rel))};
  }));
  return out;
}

std::vector<CheckResult> holder_core_campaign(const VerifyConfig& config) {
  std::vector<CheckResult> out;
  append(out, per_index_family(1, std::min(config.n_max, 50),
                               [](int n) { return std::vector<CheckResult>{wirtinger_check(n)}; }));
  append(out, timed([] { return std::vector<CheckResult>{wirtinger_equality_check(0.0, 1.0)}; }));
  append(out, timed([&] {
    Prop23Options opt;
    opt.x_max = config.x_cap;
    return check_prop_2_3(opt);
  }));
  append(out, timed([&] { return check_nesting(config.n_max); }));
  append(out, timed([&] { return check_prop_inequalities(config.checklist); }));
  return out;
}

ojson interval_json(const Interval& v) { return ojson::array({v.lo(), v.hi()}); }

ojson check_json(const CheckResult& c, bool timings) {
  ojson j;
  j["id"] = c.id;
  j["anchor"] = c.anchor;
  j["verdict"] = to_string(c.verdict);
  j["certified"] = c.certified;
  j["margin"] = interval_json(c.margin);
  j["detail"] = c.detail;
  if (timings) j["elapsed_ms"] = c.elapsed_ms;
  return j;
}

ojson record_json(const QuotientRecord& r) {
  ojson j;
  j["x"] = r.x;
  j["y"] = r.y;
  j["alpha_exp"] = r.alpha_exp;
  j["q"] = r.q;
  j["interval_index"] = r.interval_index;
  j["provenance"] = to_string(r.provenance);
  return j;
}

ojson piece_json(const PieceSup& p) {
  ojson j;
  j["n"] = p.n;
  j["sup"] = p.sup;
  j["arg"] = record_json(p.arg);
  return j;
}

ojson supremum_to_json(const SupremumReport& s, bool timings) {
  ojson j;
  j["n_max"] = s.n_max;
  j["x_cap"] = s.x_cap;
  j["resolution"] = s.resolution;
  j["alpha_exp"] = s.alpha_exp;
  j["sup_estimate"] = s.sup_estimate;
  j["within_bound"] = s.within_bound;
  j["arg"] = record_json(s.arg);
  j["j0"] = piece_json(s.j0);
  ojson per = ojson::array();
  for (const auto& p : s.per_interval) per.push_back(piece_json(p));
  j["per_interval"] = std::move(per);
  j["method_breakdown"] = {{"grid", s.method_breakdown.grid},
                           {"newton", s.method_breakdown.newton},
                           {"boundary", s.method_breakdown.boundary},
                           {"remap", s.method_breakdown.remap}};
  j["bound_certificate"] = s.bound_certificate;
  j["witness"] = record_json(s.witness);
  ojson tails = ojson::array();
  for (const auto& c : s.tail_certificates) tails.push_back(check_json(c, timings));
  j["tail_certificates"] = std::move(tails);
  return j;
}

ojson row_json(const ConstantsRow& r) {
  ojson j;
  j["n"] = r.n;
  j["alpha_n"] = r.alpha_n;
  j["alpha_np1"] = r.alpha_np1;
  j["delta"] = r.delta;
  j["i_closed"] = r.i_closed;
  j["i_quad"] = r.i_quad;
  j["g"] = r.g;
  j["f_factor"] = r.f_factor;
  j["c"] = r.c;
  return j;
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

void supremum_md(std::ostream& os, const SupremumReport& s) {
  os << "- sup estimate: " << format_double(s.sup_estimate) << " at (x, y) = (" << format_double(s.arg.x) << ", "
     << format_double(s.arg.y) << "), J index " << s.arg.interval_index << ", " << to_string(s.arg.provenance)
     << "\n";
  os << "- within sqrt(2) + 1e-9: " << (s.within_bound ? "yes" : "no") << "\n";
  os << "- search: n = 1.." << s.n_max << ", x_cap " << format_double(s.x_cap) << ", resolution " << s.resolution
     << ", exponent " << format_double(s.alpha_exp) << "\n";
  os << "- J_0 sup: " << format_double(s.j0.sup) << " at (" << format_double(s.j0.arg.x) << ", "
     << format_double(s.j0.arg.y) << ")\n";
  os << "- witness (y -> 0, x = 2/pi): " << format_double(s.witness.q) << "\n";
  os << "- tail bound for n > " << s.n_max << ": " << format_double(s.bound_certificate) << "\n";
  os << "- winners by method: grid " << s.method_breakdown.grid << ", newton " << s.method_breakdown.newton
     << ", boundary " << s.method_breakdown.boundary << ", remap " << s.method_breakdown.remap << "\n\n";
  if (!s.tail_certificates.empty()) {
    os << "| certificate | anchor | verdict | margin |\n|---|---|---|---|\n";
    for (const auto& c : s.tail_certificates) {
      os << "| " << c.id << " | " << md_escape(c.anchor) << " | " << to_string(c.verdict) << " | "
         << format_double(c.margin.lo()) << " |\n";
    }
    os << "\n";
  }
  const std::size_t shown = std::min<std::size_t>(s.per_interval.size(), 10);
  os << "| n | sup over J_n | x | y | method |\n|---|---|---|---|---|\n";
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& p = s.per_interval[i];
    os << "| " << p.n << " | " << format_double(p.sup) << " | " << format_double(p.arg.x) << " | "
       << format_double(p.arg.y) << " | " << to_string(p.arg.provenance) << " |\n";
  }
  if (shown < s.per_interval.size()) os << "\n(" << s.per_interval.size() - shown << " more rows in the JSON report)\n";
}

}  // namespace

VerificationReport run_verification(const VerifyConfig& config) {
  if (config.n_max < 1 || config.n_max > kMaxIndex) {
    throw ConfigError("--n-max must lie in [1, " + std::to_string(kMaxIndex) + "]");
  }
  if (!(config.x_cap >= 4.0 / M_PI) || !std::isfinite(config.x_cap)) throw ConfigError("--x-cap must be at least 4/pi");
  if (config.resolution < 64 || config.resolution > (1 << 14)) throw ConfigError("--resolution must lie in [64, 16384]");
  // Parse the checklist up front so a bad file is a configuration error.
  if (!config.checklist.empty()) load_checklist(config.checklist);

  // Warm the root table serially; campaigns then only read it.
  for (int n = 1; n <= config.n_max + 1; ++n) find_alpha(n);

  VerificationReport rep;
  rep.tool_version = tool_version();
  rep.config = config;

  std::vector<std::vector<CheckResult>> parts(3);
  std::optional<SupremumReport> sup;
  std::vector<ConstantsRow> rows;
  const std::vector<std::function<void()>> tasks{
      [&] { parts[0] = special_points_campaign(config.n_max); },
      [&] {
        parts[1] = constants_campaign(config.n_max);
        rows = constants_table(config.n_max);
      },
      [&] { parts[2] = holder_core_campaign(config); },
      [&] {
        if (config.supremum) sup = global_sup(config.n_max, config.x_cap, config.resolution);
      },
  };
  parallel_for(tasks.size(), [&](std::size_t i) { tasks[i](); });

  for (auto& p : parts) append(rep.checks, std::move(p));
  rep.constants_table = std::move(rows);
  rep.supremum = std::move(sup);
  rep.summary = tally(rep.checks);
  return rep;
}

int exit_code(const VerificationReport& report) {
  if (report.summary.failed > 0) return 1;
  if (report.config.strict && report.summary.undecided > 0) return 1;
  return 0;
}

std::string render_json(const VerificationReport& report) {
  const bool timings = report.config.timings;
  ojson j;
  j["tool_version"] = report.tool_version;
  j["config"] = {{"n_max", report.config.n_max},
                 {"resolution", report.config.resolution},
                 {"x_cap", report.config.x_cap},
                 {"checklist", report.config.checklist.empty() ? "built-in" : report.config.checklist},
                 {"strict", report.config.strict},
                 {"supremum", report.config.supremum}};
  ojson checks = ojson::array();
  for (const auto& c : report.checks) checks.push_back(check_json(c, timings));
  j["checks"] = std::move(checks);
  ojson rows = ojson::array();
  for (const auto& r : report.constants_table) rows.push_back(row_json(r));
  j["constants_table"] = std::move(rows);
  j["supremum"] = report.supremum ? supremum_to_json(*report.supremum, timings) : ojson(nullptr);
  j["summary"] = {{"total", report.summary.total},
                  {"passed", report.summary.passed},
                  {"failed", report.summary.failed},
                  {"undecided", report.summary.undecided}};
  return j.dump(2) + "\n";
}

std::string render_markdown(const VerificationReport& report) {
  std::ostringstream os;
  const Summary& s = report.summary;
  os << "# holder-cert verification report\n\n";
  os << "- tool version: " << report.tool_version << "\n";
  os << "- n_max: " << report.config.n_max << ", resolution: " << report.config.resolution
     << ", x_cap: " << format_double(report.config.x_cap)
     << ", checklist: " << (report.config.checklist.empty() ? "built-in" : report.config.checklist) << "\n\n";
  os << "## Summary\n\n" << s.total << " checks: " << s.passed << " passed, " << s.failed << " failed, "
     << s.undecided << " undecided.\n\n";
  os << "## Checks\n\n| id | anchor | verdict | certified | margin (lower) | detail |";
  if (report.config.timings) os << " ms |";
  os << "\n|---|---|---|---|---|---|";
  if (report.config.timings) os << "---|";
  os << "\n";
  for (const auto& c : report.checks) {
    os << "| " << c.id << " | " << md_escape(c.anchor) << " | " << to_string(c.verdict) << " | "
       << (c.certified ? "yes" : "no") << " | " << format_double(c.margin.lo()) << " | " << md_escape(c.detail)
       << " |";
    if (report.config.timings) os << " " << format_double(c.elapsed_ms) << " |";
    os << "\n";
  }
  os << "\n## Constants\n\n| n | alpha_n | alpha_{n+1} | delta_n | I_n | G_n | F_n | C_n |\n"
        "|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : report.constants_table) {
    os << "| " << r.n << " | " << format_double(r.alpha_n) << " | " << format_double(r.alpha_np1) << " | "
       << format_double(r.delta) << " | " << format_double(r.i_closed) << " | " << format_double(r.g) << " | "
       << format_double(r.f_factor) << " | " << format_double(r.c) << " |\n";
  }
  if (report.supremum) {
    os << "\n## Holder-1/2 quotient\n\n";
    supremum_md(os, *report.supremum);
  }
  return os.str();
}

std::string supremum_json(const SupremumReport& report) { return supremum_to_json(report, false).dump(2) + "\n"; }

std::string supremum_markdown(const SupremumReport& report) {
  std::ostringstream os;
  os << "# Holder quotient search\n\n";
  supremum_md(os, report);
  return os.str();
}

std::vector<ConstantsRow> constants_table(int n_max) {
  if (n_max < 1 || n_max > kMaxIndex) throw ConfigError("n_max must lie in [1, " + std::to_string(kMaxIndex) + "]");
  std::vector<ConstantsRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) rows.push_back(c_n(n));
  return rows;
}

std::string constants_csv(const std::vector<ConstantsRow>& rows) {
  std::string out = "n,alpha_n,alpha_np1,delta,i_closed,i_quad,g,f_factor,c\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n);
    for (double v : {r.alpha_n, r.alpha_np1, r.delta, r.i_closed, r.i_quad, r.g, r.f_factor, r.c}) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

std::string constants_json(const std::vector<ConstantsRow>& rows) {
  ojson arr = ojson::array();
  for (const auto& r : rows) arr.push_back(row_json(r));
  return arr.dump(2) + "\n";
}

void write_landscape(std::ostream& os, int n, int resolution, double x_cap) {
  if (n < 0 || n > kMaxIndex) throw ConfigError("--n must lie in [0, " + std::to_string(kMaxIndex) + "]");
  if (resolution < 2 || resolution > 4096) throw ConfigError("--resolution must lie in [2, 4096]");
  double lo = 0.0;
  double hi = 0.0;
  if (n == 0) {
    lo = 1.0 / alpha_point(1);
    hi = x_cap;
    if (!(hi > lo)) throw ConfigError("x_cap must exceed 1/alpha_1");
  } else {
    std::tie(lo, hi) = piece_bounds(n);
  }
  std::vector<double> pts(static_cast<std::size_t>(resolution));
  std::vector<double> fv(pts.size());
  for (int i = 0; i < resolution; ++i) {
    pts[static_cast<std::size_t>(i)] = (i == resolution - 1) ? hi : lo + (hi - lo) * i / (resolution - 1);
  }
  for (std::size_t i = 0; i < pts.size(); ++i) fv[i] = f(pts[i]);
  std::string buf = "x,y,q\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const double q = (i == j) ? 0.0 : std::fabs(fv[i] - fv[j]) / std::sqrt(std::fabs(pts[j] - pts[i]));
      buf += format_double(pts[i]);
      buf += ',';
      buf += format_double(pts[j]);
      buf += ',';
      buf += format_double(q);
      buf += '\n';
    }
  }
  os << buf;
}

}  // namespace holder
