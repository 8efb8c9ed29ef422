#include <doctest.h>

#include <random>

#include "ccschur/errors.hpp"
#include "helpers.hpp"
#include "support/oracles.hpp"

using namespace ccschur;
using ccschur::test::M;
using ccschur::test::P;
using ccschur::test::V;

TEST_CASE("codes from generators") {
  const FieldSpec f5(5);
  const RingSpec r5(f5, 4, 1);
  const ConstacyclicCode line(r5, P(f5, {3, 4, 2, 1}));
  CHECK(line.dimension() == 1);
  CHECK(line.generator() == P(f5, {1, 3, 4, 2}));
  CHECK(line.basis() == M(f5, {{1, 3, 4, 2}}));
  CHECK(row_spaces_equal(line.basis(), M(f5, {{3, 4, 2, 1}})));

  const FieldSpec f3(3);
  const ConstacyclicCode c3(RingSpec(f3, 6, 1), P(f3, {2, 1, 0, 2, 1}));
  CHECK(c3.dimension() == 2);
  CHECK(c3.generator_matrix() == M(f3, {{1, 2, 0, 1, 2, 0}, {0, 1, 2, 0, 1, 2}}));

  const FieldSpec f7(7);
  const ConstacyclicCode c7(RingSpec(f7, 6, 2), P(f7, {4, 0, 0, 1}));
  CHECK(c7.dimension() == 3);
  CHECK(c7.generator() == P(f7, {1, 0, 0, 2}));
}

TEST_CASE("x^3 + 4 does not divide x^6 + 2 over F_7") {
  const FieldSpec f7(7);
  CHECK_THROWS_AS(ConstacyclicCode(RingSpec(f7, 6, 5), P(f7, {4, 0, 0, 1})), NotADivisor);
  CHECK(poly_gcd(P(f7, {4, 0, 0, 1}), RingSpec(f7, 6, 5).modulus()) == P(f7, {1}));
}

TEST_CASE("generator validation") {
  const FieldSpec f5(5);
  const RingSpec r5(f5, 4, 1);
  CHECK_THROWS_AS(ConstacyclicCode(r5, Poly(f5)), ZeroGenerator);
  CHECK_THROWS_AS(ConstacyclicCode(r5, P(f5, {1, 1, 1})), NotADivisor);
  CHECK_THROWS_AS(ConstacyclicCode(r5, P(FieldSpec(7), {1, 1})), FieldMismatch);
  CHECK_THROWS_AS(ConstacyclicCode(r5, P(f5, {1, 0, 0, 0, 0, 0, 0, 0, 1})), NotADivisor);
  const ConstacyclicCode zero(r5, r5.modulus());
  CHECK(zero.dimension() == 0);
  const ConstacyclicCode full(r5, P(f5, {3}));
  CHECK(full.dimension() == 4);
  CHECK(full.basis() == MatrixFq::identity(f5, 4));
}

TEST_CASE("constacyclic shift") {
  const FieldSpec f5(5);
  const RingSpec r5(f5, 4, 1);
  CHECK(shift(V({3, 4, 2, 1}), r5) == V({1, 3, 4, 2}));
  CHECK(shift(V({3, 4, 2, 1}), r5, 0) == V({3, 4, 2, 1}));

  const FieldSpec f7(7);
  const RingSpec r7(f7, 6, 5);
  CHECK(shift(V({0, 0, 2, 0, 0, 1}), r7) == V({5, 0, 0, 2, 0, 0}));
  CHECK(shift(V({0, 0, 2, 0, 0, 1}), RingSpec(f7, 6, 2)) == V({2, 0, 0, 2, 0, 0}));
}

TEST_CASE("shift is linear, n shifts scale by a, and it matches multiplication by x") {
  std::mt19937_64 rng(8);
  for (const std::uint32_t q : {3u, 5u, 7u, 11u}) {
    const FieldSpec f(q);
    std::uniform_int_distribution<Residue> d(0, q - 1);
    for (std::size_t n = 1; n <= 9; ++n) {
      const RingSpec ring(f, n, 1 + d(rng) % (q - 1));
      Vec c(n), e(n);
      for (auto& x : c) x = d(rng);
      for (auto& x : e) x = d(rng);
      Vec sum(n);
      for (std::size_t i = 0; i < n; ++i) sum[i] = f.add(c[i], e[i]);
      const Vec sc = shift(c, ring), se = shift(e, ring);
      Vec expect(n);
      for (std::size_t i = 0; i < n; ++i) expect[i] = f.add(sc[i], se[i]);
      REQUIRE(shift(sum, ring) == expect);
      Vec ac(n);
      for (std::size_t i = 0; i < n; ++i) ac[i] = f.mul(ring.a(), c[i]);
      REQUIRE(shift(c, ring, n) == ac);
      for (std::size_t i = 0; i < 2 * n + 1; ++i) {
        REQUIRE(shift(c, ring, i) == ring_reduce(Poly::monomial(f, i) * Poly(f, c), ring).embed(n));
      }
    }
  }
}

TEST_CASE("constacyclicity test") {
  const FieldSpec f5(5);
  const RingSpec r5(f5, 4, 1);
  for (const auto& g : enumerate_divisors(r5)) CHECK(is_constacyclic(ConstacyclicCode(r5, g).basis(), r5));
  CHECK(is_constacyclic(MatrixFq::identity(f5, 2), RingSpec(f5, 2, 3)));

  const FieldSpec f7(7);
  const auto disjoint = M(f7, {{2, 0, 0, 1, 0, 0}, {0, 2, 0, 0, 1, 0}, {0, 0, 2, 0, 0, 1}});
  CHECK_FALSE(is_constacyclic(disjoint, RingSpec(f7, 6, 5)));
  CHECK_FALSE(is_constacyclic(disjoint, RingSpec(f7, 6, 2)));
  CHECK(is_constacyclic(disjoint, RingSpec(f7, 6, 4)));  // 2^2 = 4
}

TEST_CASE("generator recovery from a basis") {
  const FieldSpec f3(3);
  const RingSpec r3(f3, 6, 1);
  CHECK(generator_from_basis(M(f3, {{2, 1, 0, 2, 1, 0}, {0, 2, 1, 0, 2, 1}}), r3) == P(f3, {1, 2, 0, 1, 2}));

  const FieldSpec f5(5);
  const RingSpec r5(f5, 4, 1);
  CHECK(generator_from_basis(M(f5, {{1, 1, 1, 1}}), r5) == P(f5, {1, 1, 1, 1}));
  CHECK_THROWS_AS(generator_from_basis(MatrixFq(f5, 0, 4), r5), ZeroCode);
  CHECK_THROWS_AS(generator_from_basis(M(f5, {{1, 2, 0, 0}}), r5), NotConstacyclic);

  const FieldSpec f7(7);
  const auto disjoint = M(f7, {{2, 0, 0, 1, 0, 0}, {0, 2, 0, 0, 1, 0}, {0, 0, 2, 0, 0, 1}});
  CHECK_THROWS_AS(generator_from_basis(disjoint, RingSpec(f7, 6, 5)), NotConstacyclic);
  CHECK_THROWS_AS(generator_from_basis(disjoint, RingSpec(f7, 6, 2)), NotConstacyclic);
}

TEST_CASE("generator recovery round-trips every divisor code") {
  for (const auto& [q, n] : std::vector<std::pair<std::uint32_t, std::size_t>>{{3, 4}, {5, 6}, {7, 6}, {2, 9}, {11, 5}}) {
    const FieldSpec f(q);
    for (Residue a = 1; a < q; ++a) {
      const RingSpec ring(f, n, a);
      for (const auto& g : enumerate_divisors(ring)) {
        const ConstacyclicCode C(ring, g);
        REQUIRE(generator_from_basis(C.basis(), ring) == C.generator());
        REQUIRE(generator_from_basis(C.generator_matrix(), ring) == C.generator());
        REQUIRE(rank(C.basis()) == C.dimension());
      }
    }
  }
}

TEST_CASE("minimum distance") {
  const FieldSpec f5(5);
  const ConstacyclicCode line(RingSpec(f5, 4, 1), P(f5, {3, 4, 2, 1}));
  const auto d = min_distance(line);
  CHECK(d.value == 4);
  CHECK(d.method == DistanceMethod::exact);

  const FieldSpec f3(3);
  const ConstacyclicCode m3(RingSpec(f3, 6, 1), P(f3, {1, 0, 0, 1}));
  const auto d3 = min_distance(m3);
  CHECK(d3.value == 2);
  CHECK(d3.method == DistanceMethod::exact);
  CHECK(d3.periodic_support_start.has_value());
  CHECK(d3.periodic_support_ok);

  const ConstacyclicCode big(RingSpec(FieldSpec(257), 50, 1), Poly::constant(FieldSpec(257), 1));
  const auto lb = min_distance(big, 0);
  CHECK(lb.method == DistanceMethod::lower_bound);
  CHECK(lb.value == 1);
  const auto lb2 = min_distance(m3, 0);
  CHECK(lb2.method == DistanceMethod::lower_bound);
  CHECK(lb2.value == 2);

  const ConstacyclicCode zero(RingSpec(f5, 4, 1), RingSpec(f5, 4, 1).modulus());
  CHECK_THROWS_AS(min_distance(zero), ZeroCode);
}

TEST_CASE("weight-n/k codewords have periodic support; weights respect n/k") {
  const FieldSpec f3(3);
  const ConstacyclicCode m3(RingSpec(f3, 6, 1), P(f3, {1, 0, 0, 1}));
  std::size_t found = 0;
  for_each_codeword(m3.basis(), [&](const Vec& w) {
    if (weight(w) == 2) {
      ++found;
      std::size_t first = 0;
      while (w[first] == 0) ++first;
      CHECK(w[first + 3] != 0);
    }
    CHECK(weight(w) * 3 >= 6);
    return true;
  });
  CHECK(found == 3 * 2);  // three supports, two nonzero scalings each
}

TEST_CASE("codeword enumeration counts") {
  const FieldSpec f3(3);
  const ConstacyclicCode m3(RingSpec(f3, 6, 1), P(f3, {1, 0, 0, 1}));
  std::size_t count = 0;
  for_each_codeword(m3.basis(), [&](const Vec&) { return ++count, true; });
  CHECK(count == 26);
  CHECK(codeword_count(3, 3) == 27);
  CHECK(codeword_count(65537, 10) == UINT64_MAX);
  CHECK(exact_min_weight(MatrixFq(f3, 0, 3)) == std::nullopt);
}
