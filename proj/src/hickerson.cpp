#include "jpcount/hickerson.hpp"

#include <algorithm>
#include <map>

namespace jp::hickerson {

std::vector<Solution> search(uint32_t max_n, const SearchOptions& options) {
  if (max_n < 2) throw std::invalid_argument("search requires max_n >= 2");
  if (max_n > options.cap) {
    throw ResourceLimitError("search max_n " + std::to_string(max_n) +
                             " exceeds cap " + std::to_string(options.cap));
  }

  PrimeTable table = sieve(max_n);
  std::vector<Solution> solutions;
  // Quotients repeat little across n, but the representation search is the
  // hot path; memoize it keyed by (quotient exponents, largest allowed part).
  std::map<std::pair<ExponentVector, uint32_t>, std::vector<FactorialMultiset>> memo;

  for (uint32_t n = 3; n <= max_n; ++n) {
    uint64_t largest_prime = 0;
    for (uint64_t p : table.primes()) {
      if (p > n) break;
      largest_prime = p;
    }
    uint32_t a1_max = options.include_trivial ? n - 1 : n - 2;
    uint32_t a1_min = options.prime_pruning ? uint32_t(largest_prime) : 2;
    if (a1_min < 2) a1_min = 2;

    ExponentVector n_fact = factorial_exponents(n);
    for (uint32_t a1 = a1_max; a1 >= a1_min && a1 >= 2; --a1) {
      ExponentVector quotient = n_fact.divided_by(factorial_exponents(a1));
      auto key = std::make_pair(quotient, a1);
      auto it = memo.find(key);
      if (it == memo.end()) {
        it = memo.emplace(key, enumerate_representations(quotient, a1)).first;
      }
      for (const FactorialMultiset& rest : it->second) {
        if (rest.empty()) continue;  // r >= 2 needs at least one more part
        std::vector<uint32_t> parts;
        parts.reserve(rest.size() + 1);
        parts.push_back(a1);
        parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
        solutions.push_back(Solution{n, FactorialMultiset(std::move(parts)), a1 == n - 1});
      }
    }
  }

  std::sort(solutions.begin(), solutions.end(), [](const Solution& a, const Solution& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.rep < b.rep;
  });
  return solutions;
}

bool verify(const Solution& solution) {
  const auto& parts = solution.rep.parts();
  if (solution.n < 3 || parts.size() < 2) return false;
  if (parts.front() >= solution.n) return false;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (parts[i] < parts[i + 1]) return false;
  }
  if (parts.back() < 2) return false;
  if (solution.rep.exponents() != factorial_exponents(solution.n)) return false;
  return solution.trivial == (parts.front() == solution.n - 1);
}

}  // namespace jp::hickerson
