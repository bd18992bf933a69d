#include "jpcount/jordan_polya.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace jp {

std::string_view family_tag(Family family) {
  return family == Family::AnyFactorial ? "j" : "jp";
}

std::optional<Family> family_from_tag(std::string_view tag) {
  if (tag == "j") return Family::AnyFactorial;
  if (tag == "jp") return Family::PrimeFactorial;
  return std::nullopt;
}

namespace {

bool is_small_prime(uint64_t m) {
  if (m < 2) return false;
  for (uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

// Ascending factorials of the family's bases that do not exceed bound.
template <class UInt>
std::vector<UInt> base_factorials(const UInt& bound, Family family) {
  std::vector<UInt> facts;
  UInt fact = 1;
  for (uint64_t m = 2;; ++m) {
    if (fact > bound / UInt(m)) break;  // fact * m would exceed bound
    fact *= UInt(m);
    if (family == Family::AnyFactorial || is_small_prime(m)) facts.push_back(fact);
  }
  return facts;
}

template <class UInt>
void enumerate_rec(const UInt& cur, std::size_t max_idx, const UInt& bound,
                   const std::vector<UInt>& facts, uint64_t cap, std::set<UInt>& out) {
  out.insert(cur);
  if (out.size() > cap) {
    throw ResourceLimitError("enumeration exceeds cap of " + std::to_string(cap) + " values");
  }
  for (std::size_t i = 0; i < max_idx; ++i) {
    if (facts[i] > bound / cur) break;  // facts ascend, so later ones fail too
    enumerate_rec(UInt(cur * facts[i]), i + 1, bound, facts, cap, out);
  }
}

struct U128Hash {
  std::size_t operator()(u128 v) const {
    uint64_t x = uint64_t(v) ^ (uint64_t(v >> 64) * 0x9e3779b97f4a7c15ull);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    return std::size_t(x);
  }
};

template <class UInt, class Memo>
bool member_rec(const UInt& n, const std::vector<UInt>& all_facts, Memo& memo) {
  if (n == 1) return true;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  bool found = false;
  for (const UInt& f : all_facts) {
    if (f > n) break;
    if (n % f == 0 && member_rec(UInt(n / f), all_facts, memo)) {
      found = true;
      break;
    }
  }
  memo.emplace(n, found);
  return found;
}

}  // namespace

Enumeration enumerate_jordan_polya(const BigInt& bound, Family family,
                                   const EnumerationOptions& options) {
  if (sgn(bound) <= 0) throw std::invalid_argument("enumeration bound must be >= 1");

  Enumeration result{.bound = bound, .family = family};
  if (!options.force_wide && fits_fast_path(bound)) {
    u128 b = to_u128(bound);
    std::vector<u128> facts = base_factorials<u128>(b, family);
    std::set<u128> out;
    enumerate_rec<u128>(1, facts.size(), b, facts, options.max_values, out);
    result.values.reserve(out.size());
    for (u128 v : out) result.values.push_back(to_bigint(v));
  } else {
    std::vector<BigInt> facts = base_factorials<BigInt>(bound, family);
    std::set<BigInt> out;
    enumerate_rec<BigInt>(1, facts.size(), bound, facts, options.max_values, out);
    result.values.assign(out.begin(), out.end());
  }
  return result;
}

uint64_t count_jordan_polya(const BigInt& bound, Family family,
                            const EnumerationOptions& options) {
  return enumerate_jordan_polya(bound, family, options).values.size();
}

bool is_jordan_polya(const BigInt& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("membership requires n >= 1");
  if (fits_fast_path(n)) {
    u128 v = to_u128(n);
    std::vector<u128> facts = base_factorials<u128>(v, Family::AnyFactorial);
    std::unordered_map<u128, bool, U128Hash> memo;
    return member_rec(v, facts, memo);
  }
  std::vector<BigInt> facts = base_factorials<BigInt>(n, Family::AnyFactorial);
  std::map<BigInt, bool> memo;
  return member_rec(n, facts, memo);
}

std::vector<bool> membership_sweep(uint64_t limit) {
  std::vector<bool> member(limit + 1, false);
  if (limit >= 1) member[1] = true;
  std::vector<uint64_t> facts;
  uint64_t fact = 1;
  for (uint64_t m = 2; limit / m >= fact; ++m) {
    fact *= m;
    facts.push_back(fact);
  }
  for (uint64_t n = 2; n <= limit; ++n) {
    for (uint64_t f : facts) {
      if (f > n) break;
      if (n % f == 0 && member[n / f]) {
        member[n] = true;
        break;
      }
    }
  }
  return member;
}

PrimeFactorialDecomposition::PrimeFactorialDecomposition(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].second == 0 || (i > 0 && entries_[i - 1].first == entries_[i].first)) {
      throw std::invalid_argument("decomposition entries must be distinct with exponent >= 1");
    }
  }
}

uint64_t PrimeFactorialDecomposition::exponent(uint64_t p) const {
  for (const auto& [q, e] : entries_) {
    if (q == p) return e;
  }
  return 0;
}

BigInt PrimeFactorialDecomposition::value() const {
  BigInt out = 1;
  BigInt fact, pw;
  for (const auto& [p, e] : entries_) {
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(p));
    mpz_pow_ui(pw.get_mpz_t(), fact.get_mpz_t(), e);
    out *= pw;
  }
  return out;
}

namespace {

template <class UInt>
std::optional<std::vector<PrimeFactorialDecomposition::Entry>> decompose_impl(UInt n) {
  // Primes p with p! <= n, with the factorial values.
  std::vector<std::pair<uint64_t, UInt>> prime_facts;
  UInt fact = 1;
  for (uint64_t m = 2; n / UInt(m) >= fact; ++m) {
    fact *= UInt(m);
    if (is_small_prime(m)) prime_facts.emplace_back(m, fact);
  }

  std::vector<PrimeFactorialDecomposition::Entry> entries;
  UInt rem = n;
  for (auto it = prime_facts.rbegin(); it != prime_facts.rend(); ++it) {
    auto [p, pfact] = *it;
    uint64_t e = 0;
    for (UInt t = rem; t % UInt(p) == 0; t /= UInt(p)) ++e;
    if (e == 0) continue;
    // The exponent of p! is forced to e = v_p(rem): p appears exactly once in
    // p! and in no smaller prime factorial.
    for (uint64_t i = 0; i < e; ++i) {
      if (rem % pfact != 0) return std::nullopt;
      rem /= pfact;
    }
    entries.emplace_back(p, e);
  }
  if (rem != 1) return std::nullopt;  // leftover has no covering prime factorial
  std::reverse(entries.begin(), entries.end());
  return entries;
}

}  // namespace

std::optional<PrimeFactorialDecomposition> prime_factorial_decomposition(const BigInt& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("decomposition requires n >= 1");
  std::optional<std::vector<PrimeFactorialDecomposition::Entry>> entries;
  if (fits_fast_path(n)) {
    entries = decompose_impl<u128>(to_u128(n));
  } else {
    entries = decompose_impl<BigInt>(n);
  }
  if (!entries) return std::nullopt;
  return PrimeFactorialDecomposition(std::move(*entries));
}

std::optional<BigInt> first_without_prime_decomposition(const BigInt& bound,
                                                        const EnumerationOptions& options) {
  Enumeration all = enumerate_jordan_polya(bound, Family::AnyFactorial, options);
  for (const BigInt& v : all.values) {
    if (!prime_factorial_decomposition(v)) return v;
  }
  return std::nullopt;
}

}  // namespace jp
