#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "jpcount/common.hpp"
#include "jpcount/primes.hpp"

namespace jp {

/// Exact friable counts Psi(x, y) = #{n <= x : P(n) <= y} by the memoized
/// recursion over the usable primes; Psi(x, 1) = 1. The memo is shared across
/// queries, so keep one counter around for sweeps.
class SmoothCounter {
 public:
  explicit SmoothCounter(uint64_t x_cap = 1'000'000'000,
                         uint64_t sieve_budget = kDefaultSieveBudget);

  uint64_t psi(uint64_t x, uint64_t y);

 private:
  uint64_t rec(uint64_t x, uint64_t j);

  uint64_t x_cap_;
  uint64_t sieve_budget_;
  uint64_t sieved_to_ = 0;
  std::vector<uint64_t> primes_;
  std::unordered_map<uint64_t, uint64_t> memo_;  // key = (x << 20) | j
};

uint64_t psi(uint64_t x, uint64_t y);

/// Diagnostic ratio log Psi(x,y) / (pi(y) * log(log x / y)), the "(1+o(1))"
/// factor of the friable-count estimate; reported as a trend, never asserted.
AuditReport audit_granville(uint64_t x, uint64_t y);

/// Weighted lattice instance: non-negative integer combinations of the
/// weights with total at most the budget.
struct LatticeInstance {
  std::vector<double> weights;  // all > 0
  double budget = 0.0;
};

/// Exact N_k(z) by recursive enumeration over the last coordinate.
uint64_t ennola_count(const LatticeInstance& instance, uint64_t cap = 1'000'000'000);

/// Two-sided bound z^k/k! prod(1/a_i) < N_k(z) <= (z + sum a_i)^k/k! prod(1/a_i),
/// slack only ever favoring the assertion.
AuditReport audit_ennola(const LatticeInstance& instance);

/// Randomized small instances plus the pinned cases.
AuditReport audit_ennola_suite(uint32_t instances, uint64_t seed = 0x5eed);

/// Prime-count thresholds at L = log x: r = pi(2L/log L), r1 = pi(sqrt L/log L),
/// r2 = pi(sqrt L), r3 = pi(sqrt L * log L).
struct ThresholdSet {
  double L = 0.0;
  uint64_t r = 0, r1 = 0, r2 = 0, r3 = 0;
};

ThresholdSet thresholds(double L, uint64_t sieve_budget = kDefaultSieveBudget);

/// sum_{j<=k} floor(p_k / p_j) log p_j over the first k primes of the table.
double floor_ratio_sum(uint64_t k, const PrimeTable& table);
double floor_ratio_sum(uint64_t k);  // sieves internally

struct ProofSumOptions {
  double mertens_y = 1'000'000;   // Mertens check point
  double mertens_epsilon = 0.1;
  // Per-step crossover scan ceilings; the steps hold only for large x, so the
  // scan walks a log grid until each first holds.
  double scan_max_b2 = 1e16;
  double scan_max_b3 = 1e14;
  double scan_max_b4 = 1e12;
};

/// Floor-ratio sums at the r1/r2/r3 thresholds against their (1/3)-targets,
/// with a crossover scan, plus the Mertens sum check
/// sum_{p<=y} log p / p > (1 - eps) log y.
AuditReport audit_proof_sums(double L, const ProofSumOptions& options = {});

/// Log-scale envelopes for the counting function, evaluated directly in
/// L = log x: log_upper = (4+eps) sqrt(L) log log L / log L and
/// log_lower = (2-eps) sqrt(L) / log L.
struct BoundEval {
  double L = 0.0;
  double epsilon = 0.0;
  double log_upper = 0.0;
  double log_lower = 0.0;
};

BoundEval bound_eval(double L, double epsilon);

/// Solves s log s = sqrt(L) (bracketed bisection to 1e-12 relative) and
/// evaluates g(s) = s (1 + 1/log s + log L - 2 log s - 2 log log s).
/// local_max_ok records whether g(s) >= g(s(1 +/- 0.01)); the stationarity
/// behind it is asymptotic, so the outcome is reported rather than thrown.
struct OptimizerResult {
  double s = 0.0;
  double log_f = 0.0;       // g(s)
  bool local_max_ok = false;
  double g_minus = 0.0;     // g(0.99 s)
  double g_plus = 0.0;      // g(1.01 s)
};

OptimizerResult optimize_lower_bound(double L);

/// Exact prime-factorial-family count at x strictly exceeds
/// (log x)^k / (k! prod_{i<=k} log(p_i!)).
AuditReport audit_jp_prime_lower(const BigInt& x, uint32_t k);

}  // namespace jp
