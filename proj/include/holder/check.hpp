#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "holder/interval.hpp"

namespace holder {

enum class Verdict { Pass, Fail, Undecided };

const char* to_string(Verdict v);

// One verified inequality. `margin` is a certified enclosure of (rhs - lhs)
// for certified checks, or the point value of the same quantity for
// quadrature/sampling checks (certified == false).
struct CheckResult {
  std::string id;
  std::string anchor;
  Verdict verdict = Verdict::Undecided;
  Interval margin;
  bool certified = true;
  std::string detail;
  double elapsed_ms = 0.0;
};

// Strict "lhs < rhs" given diff = rhs - lhs: Pass iff diff.lo > 0,
// Fail iff diff.hi <= 0. Equality inside the enclosure is Undecided.
CheckResult certify_strict(std::string id, std::string anchor, const Interval& diff,
                           std::string detail = {});

// Non-strict "lhs <= rhs": Pass iff diff.lo >= 0, Fail iff diff.hi < 0.
CheckResult certify_nonstrict(std::string id, std::string anchor, const Interval& diff,
                              std::string detail = {});

// Numerical (uncertified) check: Pass iff value > 0.
CheckResult numeric_check(std::string id, std::string anchor, double value, std::string detail = {});

// Worst verdict of the two; Fail dominates Undecided dominates Pass.
Verdict worse(Verdict a, Verdict b);

// Collapses per-index results sharing one id into a single record: worst
// verdict, tightest margin, and a detail naming the index range and the
// index where the margin is tightest.
CheckResult aggregate(std::span<const CheckResult> items, std::string_view index_name,
                      std::span<const int> indices);

}  // namespace holder
