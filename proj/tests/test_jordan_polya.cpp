#include <doctest.h>

#include <map>
#include <set>

#include "jpcount/jordan_polya.hpp"
#include "reference_values.hpp"

using namespace jp;

TEST_CASE("enumeration reproduces the reference list below 10^4") {
  Enumeration e = enumerate_jordan_polya(BigInt(10000));
  REQUIRE(e.values.size() == testing::kJordanPolyaUpTo10000.size());
  for (std::size_t i = 0; i < e.values.size(); ++i) {
    CHECK(e.values[i] == testing::kJordanPolyaUpTo10000[i]);
  }
}

TEST_CASE("enumeration edge cases") {
  Enumeration one = enumerate_jordan_polya(BigInt(1));
  CHECK(one.values == std::vector<BigInt>{BigInt(1)});
  CHECK(count_jordan_polya(BigInt(10)) == 5);  // 1, 2, 4, 6, 8
  CHECK_THROWS_AS(enumerate_jordan_polya(BigInt(0)), std::invalid_argument);

  uint64_t prev = 0;
  for (uint64_t bound = 1; bound <= 100000; bound *= 10) {
    uint64_t count = count_jordan_polya(BigInt(bound));
    CHECK(count >= prev);  // monotone in the bound
    prev = count;
  }

  EnumerationOptions tight;
  tight.max_values = 10;
  CHECK_THROWS_AS(enumerate_jordan_polya(BigInt(10000), Family::AnyFactorial, tight),
                  ResourceLimitError);
}

TEST_CASE("wide path agrees with the fast path") {
  EnumerationOptions wide;
  wide.force_wide = true;
  Enumeration a = enumerate_jordan_polya(BigInt(1000000));
  Enumeration b = enumerate_jordan_polya(BigInt(1000000), Family::AnyFactorial, wide);
  CHECK(a.values == b.values);
  Enumeration c = enumerate_jordan_polya(BigInt(100000), Family::PrimeFactorial);
  Enumeration d = enumerate_jordan_polya(BigInt(100000), Family::PrimeFactorial, wide);
  CHECK(c.values == d.values);
}

TEST_CASE("membership by divisor recursion") {
  CHECK(is_jordan_polya(BigInt(5040)));  // 7!
  CHECK(is_jordan_polya(BigInt(1)));
  CHECK(!is_jordan_polya(BigInt(100)));
  CHECK_THROWS_AS(is_jordan_polya(BigInt(0)), std::invalid_argument);
}

TEST_CASE("membership sweep is the enumeration's oracle") {
  const uint64_t limit = 100000;
  std::vector<bool> member = membership_sweep(limit);
  Enumeration e = enumerate_jordan_polya(BigInt(limit));

  std::set<uint64_t> enumerated;
  for (const BigInt& v : e.values) enumerated.insert(v.get_ui());
  for (uint64_t n = 1; n <= limit; ++n) {
    REQUIRE(member[n] == (enumerated.count(n) == 1));
  }
}

TEST_CASE("single-query membership agrees with the sweep") {
  std::vector<bool> member = membership_sweep(3000);
  for (uint64_t n = 1; n <= 3000; ++n) {
    REQUIRE(is_jordan_polya(BigInt(n)) == bool(member[n]));
  }
}

TEST_CASE("closure under products within the bound") {
  Enumeration e = enumerate_jordan_polya(BigInt(10000));
  std::set<BigInt> values(e.values.begin(), e.values.end());
  for (const BigInt& a : e.values) {
    for (const BigInt& b : e.values) {
      BigInt product = a * b;
      if (product <= e.bound) REQUIRE(values.count(product) == 1);
    }
  }
}

TEST_CASE("every prime factor stays below the largest usable factorial base") {
  // For n <= 10^6 the largest base is 9 (9! <= 10^6 < 10!), so only the
  // primes 2, 3, 5, 7 may divide a member.
  Enumeration e = enumerate_jordan_polya(BigInt(1000000));
  for (const BigInt& v : e.values) {
    uint64_t n = v.get_ui();
    for (uint64_t p : {2, 3, 5, 7}) {
      while (n % p == 0) n /= p;
    }
    REQUIRE(n == 1);
  }
}

TEST_CASE("prime-factorial family is a subset with matching counts") {
  Enumeration all = enumerate_jordan_polya(BigInt(1000000));
  Enumeration prime = enumerate_jordan_polya(BigInt(1000000), Family::PrimeFactorial);
  CHECK(prime.values.size() <= all.values.size());
  std::set<BigInt> universe(all.values.begin(), all.values.end());
  for (const BigInt& v : prime.values) REQUIRE(universe.count(v) == 1);
  CHECK(prime.values.front() == 1);

  // 24 = 2!^2 * 3! belongs to the prime-factorial family.
  std::set<BigInt> prime_set(prime.values.begin(), prime.values.end());
  CHECK(prime_set.count(BigInt(24)) == 1);
}

TEST_CASE("prime factorial decomposition round trip") {
  Enumeration prime = enumerate_jordan_polya(BigInt(1000000), Family::PrimeFactorial);
  for (const BigInt& v : prime.values) {
    auto decomposition = prime_factorial_decomposition(v);
    REQUIRE(decomposition.has_value());
    REQUIRE(decomposition->value() == v);
  }
}

TEST_CASE("decomposition examples") {
  auto d24 = prime_factorial_decomposition(BigInt(24));
  REQUIRE(d24.has_value());
  CHECK(d24->exponent(2) == 2);
  CHECK(d24->exponent(3) == 1);
  CHECK(d24->entries().size() == 2);

  auto d1 = prime_factorial_decomposition(BigInt(1));
  REQUIRE(d1.has_value());
  CHECK(d1->empty());
  CHECK(d1->value() == 1);

  // 14! / 13! = 14 = 2 * 7 and 7! does not divide 14.
  BigInt fact14;
  mpz_fac_ui(fact14.get_mpz_t(), 14);
  CHECK(!prime_factorial_decomposition(fact14).has_value());
}

TEST_CASE("uniqueness of prime-factorial decompositions up to 10^5") {
  // Independent oracle: exhaust all exponent tuples over 2!, 3!, 5!, 7!
  // (the prime factorials <= 10^5) and count tuples per value.
  const uint64_t limit = 100000;
  std::map<uint64_t, std::vector<std::map<uint64_t, uint64_t>>> by_value;
  for (uint64_t e2 = 0, v2 = 1; v2 <= limit; ++e2, v2 *= 2) {
    for (uint64_t e3 = 0, v3 = v2; v3 <= limit; ++e3, v3 *= 6) {
      for (uint64_t e5 = 0, v5 = v3; v5 <= limit; ++e5, v5 *= 120) {
        for (uint64_t e7 = 0, v7 = v5; v7 <= limit; ++e7, v7 *= 5040) {
          std::map<uint64_t, uint64_t> tuple;
          if (e2) tuple[2] = e2;
          if (e3) tuple[3] = e3;
          if (e5) tuple[5] = e5;
          if (e7) tuple[7] = e7;
          by_value[v7].push_back(std::move(tuple));
        }
      }
    }
  }

  Enumeration prime = enumerate_jordan_polya(BigInt(limit), Family::PrimeFactorial);
  REQUIRE(prime.values.size() == by_value.size());
  for (const BigInt& v : prime.values) {
    auto it = by_value.find(v.get_ui());
    REQUIRE(it != by_value.end());
    REQUIRE(it->second.size() == 1);  // exactly one decomposition

    auto computed = prime_factorial_decomposition(v);
    REQUIRE(computed.has_value());
    std::map<uint64_t, uint64_t> got(computed->entries().begin(), computed->entries().end());
    REQUIRE(got == it->second.front());
  }
}

TEST_CASE("smallest member without a prime-factorial decomposition") {
  CHECK(!first_without_prime_decomposition(BigInt(1000000)).has_value());

  BigInt fact14;
  mpz_fac_ui(fact14.get_mpz_t(), 14);
  auto first = first_without_prime_decomposition(BigInt("100000000000"));
  REQUIRE(first.has_value());
  CHECK(*first == fact14);
}

TEST_CASE("family tags") {
  CHECK(family_tag(Family::AnyFactorial) == "j");
  CHECK(family_tag(Family::PrimeFactorial) == "jp");
  CHECK(family_from_tag("j") == Family::AnyFactorial);
  CHECK(family_from_tag("jp") == Family::PrimeFactorial);
  CHECK(!family_from_tag("x").has_value());
}
