#include "holder/check.hpp"

#include <sstream>

namespace holder {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

CheckResult certify_strict(std::string id, std::string anchor, const Interval& diff, std::string detail) {
  CheckResult r{std::move(id), std::move(anchor), Verdict::Undecided, diff, true, std::move(detail)};
  switch (iv_cert_positive(diff)) {
    case Certainty::ProvedPositive: r.verdict = Verdict::Pass; break;
    case Certainty::ProvedNonpositive: r.verdict = Verdict::Fail; break;
    case Certainty::Undecided: r.verdict = Verdict::Undecided; break;
  }
  return r;
}

CheckResult certify_nonstrict(std::string id, std::string anchor, const Interval& diff, std::string detail) {
  CheckResult r{std::move(id), std::move(anchor), Verdict::Undecided, diff, true, std::move(detail)};
  if (diff.lo() >= 0.0) {
    r.verdict = Verdict::Pass;
  } else if (diff.hi() < 0.0) {
    r.verdict = Verdict::Fail;
  }
  return r;
}

CheckResult numeric_check(std::string id, std::string anchor, double value, std::string detail) {
  CheckResult r{std::move(id), std::move(anchor), value > 0.0 ? Verdict::Pass : Verdict::Fail,
                Interval{value}, false, std::move(detail)};
  return r;
}

Verdict worse(Verdict a, Verdict b) {
  if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
  if (a == Verdict::Undecided || b == Verdict::Undecided) return Verdict::Undecided;
  return Verdict::Pass;
}

CheckResult aggregate(std::span<const CheckResult> items, std::string_view index_name,
                      std::span<const int> indices) {
  if (items.empty()) return {};
  CheckResult out = items.front();
  std::size_t tightest = 0;
  int failures = 0;
  int undecided = 0;
  double elapsed = 0.0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    out.verdict = worse(out.verdict, items[i].verdict);
    if (items[i].verdict == Verdict::Fail) ++failures;
    if (items[i].verdict == Verdict::Undecided) ++undecided;
    if (items[i].margin.lo() < items[tightest].margin.lo()) tightest = i;
    elapsed += items[i].elapsed_ms;
  }
  out.margin = items[tightest].margin;
  out.elapsed_ms = elapsed;
  std::ostringstream os;
  os << index_name << "=" << indices.front() << ".." << indices.back() << " (" << items.size()
     << " instances), tightest at " << index_name << "=" << indices[tightest];
  if (failures > 0) os << ", " << failures << " failed";
  if (undecided > 0) os << ", " << undecided << " undecided";
  if (!items[tightest].detail.empty()) os << "; " << items[tightest].detail;
  out.detail = os.str();
  return out;
}

}  // namespace holder
