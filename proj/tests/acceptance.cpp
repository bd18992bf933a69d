// Acceptance suite: one line per criterion, with a wall-clock budget each.
// Exit code is the number of failed criteria (clamped to 125).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jpcount/bounds.hpp"
#include "jpcount/hickerson.hpp"
#include "jpcount/jordan_polya.hpp"
#include "jpcount/representations.hpp"
#include "reference_values.hpp"

using namespace jp;

namespace {

struct Criterion {
  std::string id;
  std::string label;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

int run_all(const std::vector<Criterion>& criteria) {
  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > criterion.budget_seconds) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    if (!ok) ++failures;
    std::printf("[%s] %-4s %s (%.2fs < %.0fs)%s%s\n", ok ? "PASS" : "FAIL",
                criterion.id.c_str(), criterion.label.c_str(), elapsed,
                criterion.budget_seconds, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}

bool expect(bool condition, const std::string& message, std::string& detail) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({"C1", "exact list regression below 10^4", 1.0, [](std::string& detail) {
    Enumeration e = enumerate_jordan_polya(BigInt(10000));
    if (!expect(e.values.size() == testing::kJordanPolyaUpTo10000.size(),
                "expected 58 values, got " + std::to_string(e.values.size()), detail)) {
      return false;
    }
    for (std::size_t i = 0; i < e.values.size(); ++i) {
      if (!expect(e.values[i] == testing::kJordanPolyaUpTo10000[i],
                  "mismatch at index " + std::to_string(i), detail)) {
        return false;
      }
    }
    return true;
  }});

  criteria.push_back({"C2", "representation counts of 24 and 576", 1.0, [](std::string& detail) {
    return expect(count_representations(BigInt(24)) == 2, "count(24) != 2", detail) &&
           expect(count_representations(BigInt(576)) == 3, "count(576) != 3", detail);
  }});

  criteria.push_back({"C3", "factorial-equation search to 200", 60.0, [](std::string& detail) {
    auto found = hickerson::search(200);
    std::vector<hickerson::Solution> expected = {
        {9, FactorialMultiset({7, 3, 3, 2}), false},
        {10, FactorialMultiset({7, 5, 3}), false},
        {10, FactorialMultiset({7, 6}), false},
        {16, FactorialMultiset({14, 5, 2}), false},
    };
    if (!expect(found == expected, "solution set differs from the known four", detail)) {
      return false;
    }
    for (const auto& sol : found) {
      if (!expect(hickerson::verify(sol), "a reported solution failed verify", detail)) {
        return false;
      }
    }
    return true;
  }});

  criteria.push_back({"C4", "membership sweep equals enumeration below 10^6", 30.0,
                      [](std::string& detail) {
    const uint64_t limit = 1000000;
    std::vector<bool> member = membership_sweep(limit);
    Enumeration e = enumerate_jordan_polya(BigInt(limit));
    uint64_t swept = 0;
    for (uint64_t n = 1; n <= limit; ++n) swept += member[n] ? 1 : 0;
    if (!expect(swept == e.values.size(),
                "sweep count " + std::to_string(swept) + " != enumeration " +
                    std::to_string(e.values.size()), detail)) {
      return false;
    }
    for (const BigInt& v : e.values) {
      if (!expect(member[v.get_ui()], "enumerated value missing from sweep", detail)) {
        return false;
      }
    }
    // Spot-check the single-query recursion against the sweep.
    for (uint64_t n = 1; n <= limit; n += 7919) {
      if (!expect(is_jordan_polya(BigInt(n)) == bool(member[n]),
                  "is_jordan_polya disagrees with sweep at " + std::to_string(n), detail)) {
        return false;
      }
    }
    return true;
  }});

  criteria.push_back({"C5", "exponent-ratio inequality for all m <= 500", 10.0,
                      [](std::string& detail) {
    for (uint64_t m = 3; m <= 500; ++m) {
      AuditReport report = audit_exponent_ratio(m);
      if (!expect(report.pass, "violation at m=" + std::to_string(m) + ": " + report.failure,
                  detail)) {
        return false;
      }
    }
    return true;
  }});

  criteria.push_back({"C6", "simplex counts and lattice bound", 10.0, [](std::string& detail) {
    AuditReport simplex = audit_simplex(8, 8);
    if (!expect(simplex.pass, simplex.failure, detail)) return false;
    if (!expect(ennola_count({.weights = {1.0, 1.0}, .budget = 2.0}) == 6,
                "N_2(2) != 6", detail)) {
      return false;
    }
    AuditReport suite = audit_ennola_suite(100);
    return expect(suite.pass, suite.failure, detail);
  }});

  criteria.push_back({"C7", "rosser, stirling, mertens audits", 30.0, [](std::string& detail) {
    AuditReport rosser = audit_rosser(100000);
    if (!expect(rosser.pass, rosser.failure, detail)) return false;
    AuditReport stirling = audit_stirling(100);
    if (!expect(stirling.pass, stirling.failure, detail)) return false;
    PrimeTable table = sieve(1000000);
    double sum = 0.0;
    for (uint64_t p : table.primes()) sum += std::log(double(p)) / double(p);
    return expect(sum > 0.9 * std::log(1e6), "mertens sum below (1-eps) log y", detail);
  }});

  criteria.push_back({"C8", "friable counts against the naive sweep", 10.0,
                      [](std::string& detail) {
    const uint32_t limit = 100000;
    std::vector<uint32_t> lpf(limit + 1, 0);
    lpf[1] = 1;
    for (uint32_t p = 2; p <= limit; ++p) {
      if (lpf[p] != 0) continue;
      for (uint32_t m = p; m <= limit; m += p) lpf[m] = p;
    }
    SmoothCounter counter;
    if (!expect(counter.psi(100, 3) == 20, "psi(100,3) != 20", detail)) return false;
    for (uint64_t y = 1; y <= 50; ++y) {
      uint64_t running = 0;
      for (uint32_t x = 1; x <= limit; ++x) {
        if (lpf[x] <= y) ++running;
        if (counter.psi(x, y) != running) {
          return expect(false, "psi mismatch at x=" + std::to_string(x) +
                                   " y=" + std::to_string(y), detail);
        }
      }
    }
    return true;
  }});

  criteria.push_back({"C9", "unique prime-factorial decompositions below 10^5", 30.0,
                      [](std::string& detail) {
    const uint64_t limit = 100000;
    // Exhaustive cross-check over all exponent tuples of 2!, 3!, 5!, 7!.
    std::set<uint64_t> seen;
    bool duplicate = false;
    for (uint64_t e2 = 0, v2 = 1; v2 <= limit; ++e2, v2 *= 2) {
      for (uint64_t e3 = 0, v3 = v2; v3 <= limit; ++e3, v3 *= 6) {
        for (uint64_t e5 = 0, v5 = v3; v5 <= limit; ++e5, v5 *= 120) {
          for (uint64_t e7 = 0, v7 = v5; v7 <= limit; ++e7, v7 *= 5040) {
            duplicate = duplicate || !seen.insert(v7).second;
          }
        }
      }
    }
    if (!expect(!duplicate, "two exponent tuples share a value", detail)) return false;

    Enumeration prime = enumerate_jordan_polya(BigInt(limit), Family::PrimeFactorial);
    if (!expect(prime.values.size() == seen.size(), "enumeration disagrees with tuples",
                detail)) {
      return false;
    }
    for (const BigInt& v : prime.values) {
      auto decomposition = prime_factorial_decomposition(v);
      if (!expect(decomposition.has_value() && decomposition->value() == v,
                  "round trip failed at " + v.get_str(), detail)) {
        return false;
      }
    }
    BigInt fact14;
    mpz_fac_ui(fact14.get_mpz_t(), 14);
    return expect(!prime_factorial_decomposition(fact14).has_value(),
                  "14! unexpectedly decomposed", detail);
  }});

  criteria.push_back({"C10", "witness multiplicities up to k = 8", 60.0,
                      [](std::string& detail) {
    for (uint32_t k = 1; k <= 8; ++k) {
      uint64_t count = count_representations(multiplicity_witness(k));
      if (!expect(count >= k, "witness k=" + std::to_string(k) + " has only " +
                                  std::to_string(count), detail)) {
        return false;
      }
    }
    return true;
  }});

  criteria.push_back({"C11", "log-scale envelope consistency", 600.0, [](std::string& detail) {
    Enumeration all = enumerate_jordan_polya(BigInt("1000000000000000000"));
    std::ostringstream trend;
    for (int exponent = 4; exponent <= 18; exponent += 2) {
      BigInt x(1);
      for (int i = 0; i < exponent; ++i) x *= 10;
      auto it = std::upper_bound(all.values.begin(), all.values.end(), x);
      double count = double(it - all.values.begin());
      double L = double(exponent) * std::log(10.0);
      BoundEval eval = bound_eval(L, 0.1);
      if (!expect(std::log(count) < eval.log_upper,
                  "log count " + std::to_string(std::log(count)) + " not below envelope " +
                      std::to_string(eval.log_upper) + " at 10^" + std::to_string(exponent),
                  detail)) {
        return false;
      }
      trend << " 10^" << exponent << ":" << (std::log(count) < eval.log_lower ? "<" : ">=")
            << "lower";
    }
    // The lower envelope only binds beyond an unspecified threshold; report it.
    std::printf("       C11 lower-envelope report (not asserted):%s\n", trend.str().c_str());

    AuditReport a = audit_jp_prime_lower(BigInt(10000), 2);
    if (!expect(a.pass, "prime-factorial lower bound failed at (1e4, 2)", detail)) return false;
    AuditReport b = audit_jp_prime_lower(BigInt(1000000), 3);
    return expect(b.pass, "prime-factorial lower bound failed at (1e6, 3)", detail);
  }});

  criteria.push_back({"C12a", "optimizer solves s log s = sqrt(L) to 1e-9", 1.0,
                      [](std::string& detail) {
    for (double L : {1e4, 1e8, 1e12}) {
      OptimizerResult result = optimize_lower_bound(L);
      double residual = std::fabs(result.s * std::log(result.s) - std::sqrt(L)) / std::sqrt(L);
      if (!expect(residual < 1e-9, "residual " + std::to_string(residual), detail)) {
        return false;
      }
    }
    return true;
  }});

  // The +/-1% stationarity probe cannot pass at the root of s log s = sqrt(L):
  // g'(s) = -1 - 1/log s - 1/log^2 s there, for every L, so g(0.99 s) exceeds
  // g(s) by about 1%. Asserted as stated and expected red; see the optimizer
  // unit tests for the verified shape of g.
  criteria.push_back({"C12b", "optimizer +/-1% local-maximum sanity check", 1.0,
                      [](std::string& detail) {
    for (double L : {1e4, 1e8, 1e12}) {
      OptimizerResult result = optimize_lower_bound(L);
      if (!expect(result.local_max_ok,
                  "g(0.99 s) = " + std::to_string(result.g_minus) + " > g(s) = " +
                      std::to_string(result.log_f) + " at L = " + std::to_string(L),
                  detail)) {
        return false;
      }
    }
    return true;
  }});

  int failures = run_all(criteria);
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
  } else {
    std::printf("all criteria passed\n");
  }
  return failures > 125 ? 125 : failures;
}
