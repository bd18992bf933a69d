#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "jpcount/common.hpp"
#include "jpcount/primes.hpp"

namespace jp {

/// A product of factorials a_1! ... a_r! held as the non-increasing multiset
/// a_1 >= ... >= a_r >= 2. The empty multiset denotes 1. Two multisets are
/// equal iff their sorted part lists are equal.
class FactorialMultiset {
 public:
  FactorialMultiset() = default;
  explicit FactorialMultiset(std::vector<uint32_t> parts);

  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  const std::vector<uint32_t>& parts() const { return parts_; }

  BigInt value() const;
  ExponentVector exponents() const;
  std::string to_string() const;  // e.g. "7!*3!^2*2!", "1" for empty

  friend bool operator==(const FactorialMultiset&, const FactorialMultiset&) = default;
  friend auto operator<=>(const FactorialMultiset& a, const FactorialMultiset& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<uint32_t> parts_;  // non-increasing, each >= 2
};

struct RepresentationOptions {
  uint64_t max_results = 1'000'000;  // resource cap on enumerated multisets
};

/// All distinct factorial multisets with the given exponent vector as value
/// and parts <= max_part, by recursive divisibility search over the largest
/// part. Sorted descending (largest multiset first is not guaranteed; order
/// is deterministic lexicographic descending).
std::vector<FactorialMultiset> enumerate_representations(const ExponentVector& n,
                                                         uint32_t max_part,
                                                         const RepresentationOptions& options = {});

/// Same, for a plain value; max_part defaults to the largest m with m! <= n.
/// n = 1 yields exactly the empty multiset.
std::vector<FactorialMultiset> enumerate_representations(
    const BigInt& n, std::optional<uint32_t> max_part = {},
    const RepresentationOptions& options = {});

uint64_t count_representations(const BigInt& n, const RepresentationOptions& options = {});

/// 2^(3k+3) * 3^(k+1): the k-th member of the explicit family whose members
/// carry at least k distinct representations.
BigInt multiplicity_witness(uint32_t k);

/// For 1 <= k <= k_max: the witness has >= k representations, and the
/// explicit chain 4!^j * 3!^(k+1-j) * 2!^(2(k+1-j)), 1 <= j <= k, appears
/// among the enumerated representations.
AuditReport audit_multiplicity_family(uint32_t k_max);

}  // namespace jp
