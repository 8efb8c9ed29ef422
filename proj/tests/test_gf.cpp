#include <doctest.h>

#include "ccschur/errors.hpp"
#include "ccschur/gf.hpp"

using namespace ccschur;

TEST_CASE("field construction rejects composites and out-of-range moduli") {
  CHECK_THROWS_AS(FieldSpec(1), NotPrime);
  CHECK_THROWS_AS(FieldSpec(9), NotPrime);
  CHECK_THROWS_AS(FieldSpec(0), NotPrime);
  CHECK_THROWS_AS(FieldSpec(4294967291u), NotPrime);  // prime, but above 2^31
  CHECK_NOTHROW(FieldSpec(2147483647u));
  CHECK_NOTHROW(FieldSpec(65537));
}

TEST_CASE("inverse, power and negative power") {
  const FieldSpec f5(5);
  CHECK(f5.inv(3) == 2);
  CHECK(f5.pow(3, -4) == 1);
  CHECK(f5.pow(2, 0) == 1);
  CHECK_THROWS_AS(f5.inv(0), DivisionByZero);

  const FieldSpec f7(7);
  CHECK(f7.pow(5, 6) == 1);
  CHECK(f7.pow(5, -1) == 3);
  CHECK(f7.reduce(-2) == 5);
}

TEST_CASE("field element operators") {
  const FieldSpec f7(7);
  const FieldElement a(f7, 5);
  const FieldElement b(f7, 4);
  CHECK((a + b).value() == 2);
  CHECK((a - b).value() == 1);
  CHECK((b - a).value() == 6);
  CHECK((a * b).value() == 6);
  CHECK((a / b).value() == f7.mul(5, f7.inv(4)));
  CHECK((-a).value() == 2);
  CHECK(a.inv().value() == 3);
  CHECK(a.pow(6).value() == 1);
  CHECK_THROWS_AS(a + FieldElement(FieldSpec(5), 1), FieldMismatch);
  CHECK_THROWS_AS(a / FieldElement(f7, 0), DivisionByZero);
}

TEST_CASE("multiplicative order") {
  CHECK(multiplicative_order(FieldSpec(5), 1) == 1);
  CHECK(multiplicative_order(FieldSpec(7), 5) == 6);
  CHECK(multiplicative_order(FieldSpec(7), 2) == 3);
  for (const std::uint32_t q : {3u, 5u, 7u, 257u, 65537u}) {
    CHECK(multiplicative_order(FieldSpec(q), q - 1) == 2);
  }
  CHECK(multiplicative_order(FieldSpec(2), 1) == 1);
  CHECK_THROWS_AS(multiplicative_order(FieldSpec(5), 0), ZeroElement);
  CHECK_THROWS_AS(multiplicative_order(FieldElement(FieldSpec(5), 0)), ZeroElement);
}

TEST_CASE("Fermat and inverse identities hold exhaustively up to 257") {
  for (std::uint32_t q = 2; q <= 257; ++q) {
    if (!is_prime(q)) continue;
    const FieldSpec f(q);
    for (Residue x = 1; x < q; ++x) {
      REQUIRE(f.mul(x, f.inv(x)) == 1);
      REQUIRE(f.pow(x, q - 1) == 1);
      const auto ord = multiplicative_order(f, x);
      REQUIRE((q - 1) % ord == 0);
      REQUIRE(f.pow(x, static_cast<std::int64_t>(ord)) == 1);
      // smallest such exponent, checked directly for small fields
      if (q <= 31) {
        for (std::uint64_t e = 1; e < ord; ++e) REQUIRE(f.pow(x, static_cast<std::int64_t>(e)) != 1);
      }
    }
  }
}

TEST_CASE("prime factorization helper") {
  CHECK(prime_factors(1).empty());
  CHECK(prime_factors(256) == std::vector<std::uint64_t>{2});
  CHECK(prime_factors(65536) == std::vector<std::uint64_t>{2});
  CHECK(prime_factors(2052) == std::vector<std::uint64_t>{2, 3, 19});
}
