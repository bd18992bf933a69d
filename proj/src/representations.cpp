#include "jpcount/representations.hpp"

#include <algorithm>

namespace jp {

FactorialMultiset::FactorialMultiset(std::vector<uint32_t> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  if (!parts_.empty() && parts_.back() < 2) {
    throw std::invalid_argument("factorial multiset parts must be >= 2");
  }
}

BigInt FactorialMultiset::value() const {
  BigInt out = 1;
  BigInt fact;
  for (uint32_t part : parts_) {
    mpz_fac_ui(fact.get_mpz_t(), part);
    out *= fact;
  }
  return out;
}

ExponentVector FactorialMultiset::exponents() const {
  ExponentVector out;
  for (uint32_t part : parts_) out.multiply(factorial_exponents(part));
  return out;
}

std::string FactorialMultiset::to_string() const {
  if (parts_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!out.empty()) out += "*";
    out += std::to_string(parts_[i]) + "!";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

struct RepSearch {
  const std::vector<ExponentVector>& fact_evs;  // fact_evs[m] = exponents of m!
  uint64_t cap;
  std::vector<uint32_t> stack;
  std::vector<FactorialMultiset> out;

  void run(const ExponentVector& rem, uint32_t max_part) {
    if (rem.empty()) {
      if (out.size() >= cap) {
        throw ResourceLimitError("representation enumeration exceeds cap of " +
                                 std::to_string(cap));
      }
      out.emplace_back(FactorialMultiset(stack));
      return;
    }
    // Parts below the largest remaining prime can never cover it.
    uint64_t need = rem.max_prime();
    for (uint32_t m = max_part; m >= need && m >= 2; --m) {
      if (!rem.divisible_by(fact_evs[m])) continue;
      stack.push_back(m);
      run(rem.divided_by(fact_evs[m]), m);
      stack.pop_back();
    }
  }
};

std::vector<ExponentVector> factorial_table(uint32_t max_part) {
  std::vector<ExponentVector> table(std::size_t(max_part) + 1);
  for (uint32_t m = 2; m <= max_part; ++m) table[m] = factorial_exponents(m);
  return table;
}

// Largest m with m! <= n.
uint32_t max_factorial_base(const BigInt& n) {
  uint32_t m = 1;
  BigInt fact = 1;
  while (fact * (m + 1) <= n) {
    ++m;
    fact *= m;
  }
  return m;
}

}  // namespace

std::vector<FactorialMultiset> enumerate_representations(const ExponentVector& n,
                                                         uint32_t max_part,
                                                         const RepresentationOptions& options) {
  if (max_part < 2) {
    if (n.empty()) return {FactorialMultiset()};
    return {};
  }
  std::vector<ExponentVector> table = factorial_table(max_part);
  RepSearch search{.fact_evs = table, .cap = options.max_results, .stack = {}, .out = {}};
  search.run(n, max_part);
  std::sort(search.out.begin(), search.out.end());
  return search.out;
}

std::vector<FactorialMultiset> enumerate_representations(const BigInt& n,
                                                         std::optional<uint32_t> max_part,
                                                         const RepresentationOptions& options) {
  if (sgn(n) <= 0) throw std::invalid_argument("representations require n >= 1");
  if (n == 1) return {FactorialMultiset()};

  uint32_t limit = max_factorial_base(n);
  if (max_part) limit = std::min(limit, *max_part);
  if (limit < 2) return {};

  // Any part m contributes only primes <= m, so n must factor completely
  // over primes <= limit; this avoids general factoring.
  ExponentVector ev;
  BigInt rem = n;
  PrimeTable table = sieve(limit);
  for (uint64_t p : table.primes()) {
    uint64_t e = 0;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) ev.push(p, e);
  }
  if (rem != 1) return {};
  return enumerate_representations(ev, limit, options);
}

uint64_t count_representations(const BigInt& n, const RepresentationOptions& options) {
  return enumerate_representations(n, std::nullopt, options).size();
}

BigInt multiplicity_witness(uint32_t k) {
  if (k < 1) throw std::invalid_argument("multiplicity witness requires k >= 1");
  BigInt two, three;
  mpz_ui_pow_ui(two.get_mpz_t(), 2, 3ull * k + 3);
  mpz_ui_pow_ui(three.get_mpz_t(), 3, uint64_t(k) + 1);
  return two * three;
}

AuditReport audit_multiplicity_family(uint32_t k_max) {
  AuditReport report{.name = "multiplicity-family k_max=" + std::to_string(k_max)};
  for (uint32_t k = 1; k <= k_max; ++k) {
    BigInt n = multiplicity_witness(k);
    std::vector<FactorialMultiset> reps = enumerate_representations(n);
    if (reps.size() < k) {
      report.fail("witness k=" + std::to_string(k) + " has only " +
                  std::to_string(reps.size()) + " representations");
      return report;
    }
    for (uint32_t j = 1; j <= k; ++j) {
      std::vector<uint32_t> parts;
      parts.insert(parts.end(), j, 4);
      parts.insert(parts.end(), k + 1 - j, 3);
      parts.insert(parts.end(), 2 * (k + 1 - j), 2);
      FactorialMultiset expected(std::move(parts));
      if (!std::binary_search(reps.begin(), reps.end(), expected)) {
        report.fail("chain member j=" + std::to_string(j) + " missing for k=" +
                    std::to_string(k));
        return report;
      }
    }
    report.note("k=" + std::to_string(k) + ": " + std::to_string(reps.size()) +
                " representations (need >= " + std::to_string(k) + ")");
  }
  return report;
}

}  // namespace jp
