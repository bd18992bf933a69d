#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "jpcount/common.hpp"

namespace jp {

// Largest limit a single sieve call will accept by default.
inline constexpr uint64_t kDefaultSieveBudget = uint64_t(1) << 31;

/// All primes up to a fixed limit. Immutable after construction, safe for
/// concurrent read-only use.
class PrimeTable {
 public:
  explicit PrimeTable(uint64_t limit, uint64_t budget = kDefaultSieveBudget);

  uint64_t limit() const { return limit_; }
  const std::vector<uint64_t>& primes() const { return primes_; }

  /// pi(x); requires x <= limit().
  uint64_t count_upto(uint64_t x) const;
  /// k-th prime, 1-based; requires k <= primes().size().
  uint64_t nth(uint64_t k) const;
  bool contains(uint64_t p) const;

 private:
  uint64_t limit_;
  std::vector<uint64_t> primes_;
};

PrimeTable sieve(uint64_t limit, uint64_t budget = kDefaultSieveBudget);

/// Exponent of prime p in m! (finite sum of floor divisions).
uint64_t legendre_exponent(uint64_t m, uint64_t p);

/// A positive integer as a finite prime -> exponent map. Entries are kept
/// sorted by prime with exponents >= 1; the empty vector denotes 1.
class ExponentVector {
 public:
  using Entry = std::pair<uint64_t, uint64_t>;  // (prime, exponent)

  ExponentVector() = default;

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  uint64_t exponent(uint64_t p) const;
  uint64_t max_prime() const;  // requires !empty()
  BigInt value() const;

  /// Append an entry; primes must be added in increasing order.
  void push(uint64_t p, uint64_t e);

  void multiply(const ExponentVector& other);  // exponents add componentwise
  void raise(uint64_t k);                      // value() -> value()^k
  bool divisible_by(const ExponentVector& d) const;
  ExponentVector divided_by(const ExponentVector& d) const;  // requires divisibility

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<Entry> entries_;
};

/// Prime factorisation of m! via Legendre's formula; keys are the primes <= m.
ExponentVector factorial_exponents(uint64_t m);

/// C(r + k, r): number of non-negative integer k-tuples with sum <= r.
BigInt simplex_count(uint64_t k, uint64_t r);

/// Chebyshev theta: sum of log p over primes p <= x. Requires x <= table.limit().
double theta(uint64_t x, const PrimeTable& table);

/// Exponent-ratio inequality for m!: for all prime pairs p < q <= m,
/// alpha_p >= floor(q/p) * alpha_q, checked in exact integers.
AuditReport audit_exponent_ratio(uint64_t m);

/// Explicit k-th-prime bounds: p_k < k log k + k log log k (k >= 6) and
/// p_k > k log k (k >= 1), checked up to k_max.
AuditReport audit_rosser(uint64_t k_max);

/// n! > (n/e)^n for all n <= n_max, and the relative error of n! against
/// (n/e)^n sqrt(2 pi n) (1 + 1/(12n)) shrinks with n (below 1e-3 at n = 100).
AuditReport audit_stirling(uint64_t n_max);

/// Binomial bound C(a+b, a) <= (e(a+b)/a)^a over 1 <= a, b <= max_ab.
AuditReport audit_binomial_bound(uint64_t max_ab);

/// Simplex counts against brute-force tuple enumeration for k <= k_max,
/// r <= r_max (the independent route: explicit recursive enumeration).
AuditReport audit_simplex(uint64_t k_max, uint64_t r_max);

/// Brute-force count of non-negative k-tuples with sum <= r (test oracle for
/// simplex_count; exponential, keep k and r small).
uint64_t simplex_count_bruteforce(uint64_t k, uint64_t r);

}  // namespace jp
