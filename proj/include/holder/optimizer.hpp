#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "holder/check.hpp"
#include "holder/holder_core.hpp"

namespace holder {

// Default truncation of J_0 for searches.
inline constexpr double kDefaultXCap = 8.0;

struct CriticalPair {
  QuotientRecord record;
  // max(|F1|, |F2|) at the returned point.
  double residual = 0.0;
  int iterations = 0;
};

// Solves f'(x) = f'(y) = a (f(y) - f(x))/(y - x) (a = alpha_exp) by damped
// Newton from a 5x5 grid of starts in J_n^2 (n = 0: [1/alpha_1, min(x_cap,
// 4/pi)]) and returns the converged interior pair of largest quotient.
std::optional<CriticalPair> critical_pair(int n, double x_cap = kDefaultXCap, double alpha_exp = 0.5);

struct PieceSup {
  int n = 0;
  double sup = 0.0;
  QuotientRecord arg;
};

// Max of the quotient over J_n^2, n >= 1: endpoint pair, critical pair, and a
// grid sweep at `resolution` refined by coordinate search.
PieceSup interval_sup(int n, int resolution = 512, double alpha_exp = 0.5);

// The same for J_0 truncated to [1/alpha_1, x_cap], including the pairs that
// straddle 1/pi.
PieceSup j0_sup(double x_cap = kDefaultXCap, int resolution = 512, double alpha_exp = 0.5);

// Exhaustive maximum over the (resolution + 1)^2 uniform grid on J_n^2
// (n = 0: [1/alpha_1, x_cap]). No refinement. resolution <= 2^14.
PieceSup brute_grid_oracle(int n, int resolution, double x_cap = kDefaultXCap, double alpha_exp = 0.5);

struct ProvenanceCounts {
  int grid = 0;
  int newton = 0;
  int boundary = 0;
  int remap = 0;
};

struct SupremumReport {
  int n_max = 0;
  double x_cap = 0.0;
  int resolution = 0;
  double alpha_exp = 0.5;
  double sup_estimate = 0.0;
  QuotientRecord arg;
  PieceSup j0;
  std::vector<PieceSup> per_interval;  // n = 1..n_max
  ProvenanceCounts method_breakdown;
  // Upper bound for sup over J_n, n > n_max: sqrt(1.83012).
  double bound_certificate = 0.0;
  // Pair (tiny y, 2/pi) exhibiting sup >= sqrt(2/pi).
  QuotientRecord witness;
  std::vector<CheckResult> tail_certificates;
  bool within_bound = false;  // sup_estimate <= sqrt(2) + 1e-9
};

// Throws ConfigError for n_max outside [1, kMaxIndex], x_cap < 4/pi,
// resolution outside [64, 2^14] or alpha_exp outside (0, 1/2].
SupremumReport global_sup(int n_max = 200, double x_cap = kDefaultXCap, int resolution = 512,
                          double alpha_exp = 0.5);

struct SpotCheck {
  long pairs = 0;
  long violations = 0;  // q > sqrt(2) + 1e-9
  QuotientRecord worst;
};

// Quotients of `pairs` uniform random pairs in [lo, hi]^2 (mt19937_64).
SpotCheck random_pair_check(long pairs, std::uint64_t seed, double lo, double hi);

}  // namespace holder
