#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "holder/check.hpp"
#include "holder/constants.hpp"
#include "holder/optimizer.hpp"

namespace holder {

std::string tool_version();

struct VerifyConfig {
  int n_max = 200;
  int resolution = 512;
  double x_cap = kDefaultXCap;
  // Empty: built-in checklist.
  std::string checklist;
  bool strict = false;
  bool timings = false;
  bool supremum = true;
};

struct Summary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int undecided = 0;
};

struct VerificationReport {
  std::string tool_version;
  VerifyConfig config;
  std::vector<CheckResult> checks;
  std::vector<ConstantsRow> constants_table;
  std::optional<SupremumReport> supremum;
  Summary summary;
};

Summary tally(const std::vector<CheckResult>& checks);

// Runs the root, constants, Wirtinger, envelope, nesting and checklist
// campaigns (independent, possibly concurrent) and assembles them in a fixed
// order. Throws ConfigError for invalid parameters.
VerificationReport run_verification(const VerifyConfig& config);

// 0 if nothing failed (and, under strict, nothing is undecided), else 1.
int exit_code(const VerificationReport& report);

// JSON with a fixed key order; elapsed times only when config.timings.
std::string render_json(const VerificationReport& report);
std::string render_markdown(const VerificationReport& report);

std::string supremum_json(const SupremumReport& report);
std::string supremum_markdown(const SupremumReport& report);

std::vector<ConstantsRow> constants_table(int n_max);
std::string constants_csv(const std::vector<ConstantsRow>& rows);
std::string constants_json(const std::vector<ConstantsRow>& rows);

// CSV `x,y,q` over a resolution x resolution grid on J_n (n = 0: [1/alpha_1,
// x_cap]); q = 0 on the diagonal. LF line endings.
void write_landscape(std::ostream& os, int n, int resolution, double x_cap = kDefaultXCap);

// Shortest round-trip decimal form of v.
std::string format_double(double v);

}  // namespace holder
