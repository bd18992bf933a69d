#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "jpcount/common.hpp"
#include "jpcount/primes.hpp"

namespace jp {

enum class Family {
  AnyFactorial,    // products of factorials m!, m >= 2 ("j")
  PrimeFactorial,  // products of prime factorials p! ("jp")
};

std::string_view family_tag(Family family);                    // "j" / "jp"
std::optional<Family> family_from_tag(std::string_view tag);

struct EnumerationOptions {
  uint64_t max_values = 10'000'000;  // resource cap on the result size
  bool force_wide = false;           // skip the 128-bit fast path (testing)
};

/// Sorted, deduplicated values of one family up to a bound. values[0] = 1
/// (the empty product) whenever bound >= 1.
struct Enumeration {
  BigInt bound;
  Family family = Family::AnyFactorial;
  std::vector<BigInt> values;
};

/// Depth-first enumeration over non-increasing factorial choices with running
/// product <= bound; output is deterministic and independent of traversal.
Enumeration enumerate_jordan_polya(const BigInt& bound, Family family = Family::AnyFactorial,
                                   const EnumerationOptions& options = {});

uint64_t count_jordan_polya(const BigInt& bound, Family family = Family::AnyFactorial,
                            const EnumerationOptions& options = {});

/// Membership by memoized recursion over factorial divisors; independent of
/// the enumeration (serves as its oracle).
bool is_jordan_polya(const BigInt& n);

/// Membership for every n <= limit by the same divisor recurrence, swept in
/// increasing order. Index i holds the answer for i; index 0 is false.
std::vector<bool> membership_sweep(uint64_t limit);

/// Exponents of p! in a product of prime factorials (entries with e >= 1).
class PrimeFactorialDecomposition {
 public:
  using Entry = std::pair<uint64_t, uint64_t>;  // (prime p, exponent of p!)

  PrimeFactorialDecomposition() = default;
  explicit PrimeFactorialDecomposition(std::vector<Entry> entries);

  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  uint64_t exponent(uint64_t p) const;
  BigInt value() const;

  friend bool operator==(const PrimeFactorialDecomposition&,
                         const PrimeFactorialDecomposition&) = default;

 private:
  std::vector<Entry> entries_;  // sorted by prime
};

/// Greedy decomposition of n as a product of prime factorials: the largest
/// prime q dividing n forces the exponent of q! (q appears exactly once in q!
/// and in no smaller factorial). Returns nullopt when n has no such product.
std::optional<PrimeFactorialDecomposition> prime_factorial_decomposition(const BigInt& n);

/// Smallest enumerated member of the factorial-product family <= bound that
/// has no prime-factorial decomposition, if any.
std::optional<BigInt> first_without_prime_decomposition(const BigInt& bound,
                                                        const EnumerationOptions& options = {});

}  // namespace jp
