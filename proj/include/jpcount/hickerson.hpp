#pragma once

#include <cstdint>
#include <vector>

#include "jpcount/representations.hpp"

namespace jp::hickerson {

/// One solution of n! = a_1! ... a_r! with n > a_1 >= ... >= a_r >= 2, r >= 2.
/// Trivial means a_1 = n - 1 (then n itself is the product of the rest).
struct Solution {
  uint32_t n = 0;
  FactorialMultiset rep;
  bool trivial = false;

  friend bool operator==(const Solution&, const Solution&) = default;
};

struct SearchOptions {
  bool include_trivial = false;
  // a_1 must cover the largest prime <= n, which divides n! exactly once.
  // The exhaustive loop exists for cross-validation.
  bool prime_pruning = true;
  uint32_t cap = 500;  // hard ceiling on max_n
};

/// All solutions with n <= max_n, sorted by (n, multiset). Without
/// include_trivial the search restricts a_1 <= n - 2.
std::vector<Solution> search(uint32_t max_n, const SearchOptions& options = {});

/// Recompute the defining identity by exponent vectors and check ordering
/// and the triviality flag.
bool verify(const Solution& solution);

}  // namespace jp::hickerson
