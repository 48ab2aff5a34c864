#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "holder/errors.hpp"
#include "holder/report.hpp"
#include "holder/special_points.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitIoOrConfig = 2;

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw holder::ConfigError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw holder::ConfigError("failed writing '" + path + "'");
}

int cmd_verify(const holder::VerifyConfig& cfg, const std::string& format, const std::string& out) {
  const holder::VerificationReport rep = holder::run_verification(cfg);
  emit(format == "md" ? holder::render_markdown(rep) : holder::render_json(rep), out);
  const holder::Summary& s = rep.summary;
  std::fprintf(stderr, "%d checks: %d passed, %d failed, %d undecided\n", s.total, s.passed, s.failed, s.undecided);
  return holder::exit_code(rep);
}

int cmd_roots(int n, int n_max, std::optional<double> tol) {
  const int last = n_max > 0 ? n_max : n;
  const int first = n_max > 0 ? 1 : n;
  if (first < 1 || last > holder::kMaxIndex + 1) throw holder::ConfigError("root index out of range");
  std::printf("%6s %24s %24s %12s %12s\n", "n", "alpha_n", "theta_n", "width", "residual");
  for (int k = first; k <= last; ++k) {
    const holder::RootCertificate cert = tol ? holder::certify_root(k, *tol) : holder::find_alpha(k);
    std::printf("%6d %24.17g %24.17g %12.3e %12.3e\n", k, cert.alpha, cert.theta, cert.alpha_enclosure().width(),
                cert.residual);
  }
  return kExitOk;
}

int cmd_constants(int n_max, const std::string& format, const std::string& out) {
  const auto rows = holder::constants_table(n_max);
  emit(format == "json" ? holder::constants_json(rows) : holder::constants_csv(rows), out);
  return kExitOk;
}

int cmd_norm(double alpha, int n_max, double x_cap, int resolution, const std::string& format) {
  const holder::SupremumReport rep = holder::global_sup(n_max, x_cap, resolution, alpha);
  emit(format == "md" ? holder::supremum_markdown(rep) : holder::supremum_json(rep), "");
  if (alpha == 0.5 && !rep.within_bound) return kExitCheckFailure;
  for (const auto& c : rep.tail_certificates) {
    if (c.verdict == holder::Verdict::Fail) return kExitCheckFailure;
  }
  return kExitOk;
}

int cmd_landscape(int n, int resolution, double x_cap, const std::string& out) {
  std::ostringstream os;
  holder::write_landscape(os, n, resolution, x_cap);
  emit(os.str(), out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified checks for |x sin(1/x) - y sin(1/y)| <= sqrt(2|x - y|)"};
  app.set_version_flag("--version", holder::tool_version());
  app.require_subcommand(1);

  holder::VerifyConfig vcfg;
  std::string v_format = "json";
  std::string v_out;
  auto* verify = app.add_subcommand("verify", "Run the full verification campaign");
  verify->add_option("--n-max", vcfg.n_max, "Largest root index checked")->capture_default_str();
  verify->add_option("--format", v_format, "Report format")->check(CLI::IsMember({"json", "md"}))->capture_default_str();
  verify->add_option("--out", v_out, "Output path (default stdout)");
  verify->add_flag("--strict", vcfg.strict, "Treat undecided checks as failures");
  verify->add_option("--checklist", vcfg.checklist, "Inequality checklist file (default built-in)");
  verify->add_flag("--timings", vcfg.timings, "Include elapsed times (breaks byte-determinism)");
  verify->add_option("--resolution", vcfg.resolution, "Grid resolution of the quotient search")->capture_default_str();
  verify->add_option("--x-cap", vcfg.x_cap, "Truncation of J_0")->capture_default_str();
  bool no_sup = false;
  verify->add_flag("--no-supremum", no_sup, "Skip the quotient search");

  int r_n = 1;
  int r_n_max = 0;
  std::optional<double> r_tol;
  auto* roots = app.add_subcommand("roots", "Print certified roots alpha_n and angles theta_n");
  roots->add_option("--n", r_n, "Root index")->capture_default_str();
  roots->add_option("--n-max", r_n_max, "Print n = 1..n-max instead");
  roots->add_option("--tol", r_tol, "Bracket width target (>= 1e-15)");

  int c_n_max = 10;
  std::string c_format = "csv";
  std::string c_out;
  auto* constants = app.add_subcommand("constants", "Print the Wirtinger constants table");
  constants->add_option("--n-max", c_n_max, "Rows n = 1..n-max")->capture_default_str();
  constants->add_option("--format", c_format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  constants->add_option("--out", c_out, "Output path (default stdout)");

  double h_alpha = 0.5;
  int h_n = 200;
  double h_x_cap = holder::kDefaultXCap;
  int h_res = 512;
  std::string h_format = "json";
  auto* norm = app.add_subcommand("norm", "Estimate the Holder quotient supremum");
  norm->add_option("--alpha", h_alpha, "Holder exponent in (0, 1/2]")->capture_default_str();
  norm->add_option("--n", h_n, "Number of monotone pieces searched")->capture_default_str();
  norm->add_option("--x-cap", h_x_cap, "Truncation of J_0")->capture_default_str();
  norm->add_option("--resolution", h_res, "Grid resolution")->capture_default_str();
  norm->add_option("--format", h_format)->check(CLI::IsMember({"json", "md"}))->capture_default_str();

  int l_n = 1;
  int l_res = 64;
  double l_x_cap = holder::kDefaultXCap;
  std::string l_out;
  auto* landscape = app.add_subcommand("landscape", "Write the quotient over J_n^2 as CSV");
  landscape->add_option("--n", l_n, "Piece index (0 for J_0)")->capture_default_str();
  landscape->add_option("--resolution", l_res, "Points per axis")->capture_default_str();
  landscape->add_option("--x-cap", l_x_cap, "Truncation of J_0")->capture_default_str();
  landscape->add_option("--out", l_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitIoOrConfig;
  }

  try {
    if (*verify) {
      vcfg.supremum = !no_sup;
      return cmd_verify(vcfg, v_format, v_out);
    }
    if (*roots) return cmd_roots(r_n, r_n_max, r_tol);
    if (*constants) return cmd_constants(c_n_max, c_format, c_out);
    if (*norm) return cmd_norm(h_alpha, h_n, h_x_cap, h_res, h_format);
    if (*landscape) return cmd_landscape(l_n, l_res, l_x_cap, l_out);
  } catch (const holder::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIoOrConfig;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIoOrConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "check failure: %s\n", e.what());
    return kExitCheckFailure;
  }
  return kExitOk;
}
