#pragma once

#include <cmath>

#include "holder/interval.hpp"

namespace test_support {

inline constexpr long double kPiL = 3.141592653589793238462643383279502884L;

inline bool encloses(const holder::Interval& iv, long double v) {
  return static_cast<long double>(iv.lo()) <= v && v <= static_cast<long double>(iv.hi());
}

// Relative closeness for doubles.
inline bool near(double a, double b, double rel) { return std::fabs(a - b) <= rel * std::fabs(b); }

}  // namespace test_support
