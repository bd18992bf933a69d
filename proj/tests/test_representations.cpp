#include <doctest.h>

#include <set>

#include "jpcount/jordan_polya.hpp"
#include "jpcount/representations.hpp"

using namespace jp;

TEST_CASE("factorial multiset basics") {
  FactorialMultiset empty;
  CHECK(empty.value() == 1);
  CHECK(empty.to_string() == "1");

  FactorialMultiset m({3, 2, 7, 3});
  CHECK(m.parts() == std::vector<uint32_t>{7, 3, 3, 2});
  CHECK(m.value() == BigInt(5040) * 6 * 6 * 2);
  CHECK(m.exponents() == factorial_exponents(9));  // 9! = 7! 3! 3! 2!
  CHECK(m.to_string() == "7!*3!^2*2!");

  CHECK_THROWS_AS(FactorialMultiset({1}), std::invalid_argument);
}

TEST_CASE("representations of 24") {
  auto reps = enumerate_representations(BigInt(24));
  REQUIRE(reps.size() == 2);
  CHECK(reps[0] == FactorialMultiset({3, 2, 2}));
  CHECK(reps[1] == FactorialMultiset({4}));
  CHECK(count_representations(BigInt(24)) == 2);
}

TEST_CASE("representations of 576") {
  auto reps = enumerate_representations(BigInt(576));
  REQUIRE(reps.size() == 3);
  CHECK(reps[0] == FactorialMultiset({3, 3, 2, 2, 2, 2}));
  CHECK(reps[1] == FactorialMultiset({4, 3, 2, 2}));
  CHECK(reps[2] == FactorialMultiset({4, 4}));
}

TEST_CASE("representation edge cases") {
  auto one = enumerate_representations(BigInt(1));
  REQUIRE(one.size() == 1);
  CHECK(one[0].empty());

  auto two = enumerate_representations(BigInt(2));
  REQUIRE(two.size() == 1);
  CHECK(two[0] == FactorialMultiset({2}));

  CHECK(enumerate_representations(BigInt(100)).empty());
  CHECK(enumerate_representations(BigInt(97)).empty());  // prime beyond any part
  CHECK_THROWS_AS(enumerate_representations(BigInt(0)), std::invalid_argument);
}

TEST_CASE("max_part restricts the search") {
  // 24 = 4! is excluded once parts must stay <= 3.
  auto reps = enumerate_representations(BigInt(24), 3);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0] == FactorialMultiset({3, 2, 2}));
}

TEST_CASE("returned multisets reconstruct n and are distinct") {
  for (uint64_t n : {24, 576, 1152, 3456, 13824, 331776}) {
    auto reps = enumerate_representations(BigInt(n));
    std::set<FactorialMultiset> seen;
    for (const auto& rep : reps) {
      CHECK(rep.value() == n);
      CHECK(seen.insert(rep).second);  // canonical uniqueness
    }
  }
}

TEST_CASE("a representation exists exactly for members") {
  std::vector<bool> member = membership_sweep(2000);
  for (uint64_t n = 1; n <= 2000; ++n) {
    REQUIRE((count_representations(BigInt(n)) >= 1) == bool(member[n]));
  }
}

TEST_CASE("representation cap") {
  RepresentationOptions tight;
  tight.max_results = 2;
  CHECK_THROWS_AS(enumerate_representations(BigInt(576), std::nullopt, tight),
                  ResourceLimitError);
}

TEST_CASE("multiplicity witnesses") {
  CHECK(multiplicity_witness(1) == 576);
  CHECK(multiplicity_witness(2) == 13824);
  CHECK(multiplicity_witness(5) == BigInt(262144) * 729);  // 2^18 * 3^6
  CHECK_THROWS_AS(multiplicity_witness(0), std::invalid_argument);
}

TEST_CASE("explicit chain members hit the witness value") {
  for (uint32_t k = 1; k <= 8; ++k) {
    BigInt expected = multiplicity_witness(k);
    for (uint32_t j = 1; j <= k; ++j) {
      std::vector<uint32_t> parts;
      parts.insert(parts.end(), j, 4);
      parts.insert(parts.end(), k + 1 - j, 3);
      parts.insert(parts.end(), 2 * (k + 1 - j), 2);
      ExponentVector ev = FactorialMultiset(parts).exponents();
      CHECK(ev.exponent(2) == 3ull * k + 3);
      CHECK(ev.exponent(3) == uint64_t(k) + 1);
      CHECK(FactorialMultiset(parts).value() == expected);
    }
  }
}

TEST_CASE("multiplicity audit") {
  AuditReport report = audit_multiplicity_family(8);
  CHECK(report.pass);
  CHECK(count_representations(multiplicity_witness(1)) == 3);  // 576 has exactly three
  CHECK(count_representations(multiplicity_witness(2)) >= 2);
}
