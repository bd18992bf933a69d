#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace jp {

// Exact naturals at the public surface. Internally, work below 2^127 runs on
// an unsigned 128-bit fast path; anything wider falls back to GMP.
using BigInt = mpz_class;
using u128 = unsigned __int128;

static_assert(sizeof(u128) * 8 == 128, "128-bit fast path unavailable");

inline constexpr int kFastPathBits = 127;

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool fits_fast_path(const BigInt& v);
u128 to_u128(const BigInt& v);
BigInt to_bigint(u128 v);
std::string decimal_string(u128 v);

// Outcome of a single floating-point inequality check. Audits must never
// report a true inequality as false, so comparisons carry a one-sided
// relative slack; margins inside the slack band are inconclusive.
enum class IneqStatus { Holds, Inconclusive, Fails };

inline constexpr double kRelSlack = 1e-9;

// Status of "lhs <= rhs" (and of "lhs < rhs"; exact FP ties land in the
// inconclusive band either way).
IneqStatus check_le(double lhs, double rhs);

// Relative margin of "lhs <= rhs": positive when the inequality holds.
double rel_margin(double lhs, double rhs);

struct AuditReport {
  std::string name;
  bool pass = true;
  std::string failure;             // first hard failure, empty when pass
  std::vector<std::string> lines;  // human-readable findings

  void note(std::string line) { lines.push_back(std::move(line)); }
  void fail(const std::string& why) {
    if (pass) {
      pass = false;
      failure = why;
    }
    lines.push_back("FAIL: " + why);
  }
  // Slack-guarded assertion of lhs <= rhs (slack only ever favors the
  // inequality, so rounding cannot produce a false alarm).
  void require_le(double lhs, double rhs, const std::string& what) {
    if (check_le(lhs, rhs) == IneqStatus::Fails) fail(what);
  }
};

}  // namespace jp
