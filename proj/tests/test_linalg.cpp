#include <doctest.h>

#include <random>
#include <set>

#include "ccschur/errors.hpp"
#include "helpers.hpp"

using namespace ccschur;
using ccschur::test::M;
using ccschur::test::V;

TEST_CASE("rref on small examples") {
  const FieldSpec f3(3);
  const auto r = rref(M(f3, {{2, 1, 0, 2, 1, 0}, {0, 2, 1, 0, 2, 1}}));
  CHECK(r.rank == 2);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});
  CHECK(r.reduced == M(f3, {{1, 0, 2, 1, 0, 2}, {0, 1, 2, 0, 1, 2}}));

  const auto id = MatrixFq::identity(f3, 4);
  CHECK(rref(id).reduced == id);
  CHECK(rref(id).rank == 4);

  CHECK(rank(M(f3, {{1, 1, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 0}, {0, 1, 1, 0, 1, 1}})) == 3);
  CHECK(rank(MatrixFq(f3, 3, 5)) == 0);
}

TEST_CASE("membership and row-space equality") {
  const FieldSpec f5(5);
  CHECK_FALSE(in_row_space(M(f5, {{4, 1, 4, 1}}), V({3, 4, 2, 1})));
  CHECK(in_row_space(M(f5, {{4, 1, 4, 1}}), V({0, 0, 0, 0})));
  CHECK(in_row_space(M(f5, {{4, 1, 4, 1}}), V({1, 4, 1, 4})));
  CHECK_THROWS_AS(in_row_space(M(f5, {{4, 1, 4, 1}}), V({1, 2})), DimensionMismatch);
  CHECK_FALSE(row_spaces_equal(M(f5, {{3, 4, 2, 1}}), M(f5, {{4, 1, 4, 1}})));

  const FieldSpec f3(3);
  const auto sq = M(f3, {{1, 1, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 0}, {0, 1, 1, 0, 1, 1}});
  CHECK(in_row_space(sq, V({1, 0, 0, 1, 0, 0})));
  const auto ideal = M(f3, {{1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}});
  CHECK(row_spaces_equal(sq, ideal));
  CHECK(row_spaces_equal(ideal, M(f3, {{0, 0, 1, 0, 0, 1}, {1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}})));
  CHECK_THROWS_AS(row_spaces_equal(ideal, M(f3, {{1, 0}})), DimensionMismatch);
}

namespace {

MatrixFq random_matrix(std::mt19937_64& rng, const FieldSpec& f, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<Residue> d(0, f.q() - 1);
  MatrixFq m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("rref is idempotent and rank matches the transpose") {
  std::mt19937_64 rng(3);
  for (const std::uint32_t q : {2u, 3u, 7u}) {
    const FieldSpec f(q);
    for (int t = 0; t < 100; ++t) {
      const auto m = random_matrix(rng, f, 1 + t % 5, 1 + (t / 5) % 6);
      const auto r = rref(m);
      REQUIRE(rref(r.reduced).reduced == r.reduced);
      REQUIRE(r.rank == rank(m.transposed()));
      for (std::size_t i = 0; i < r.rank; ++i) REQUIRE(r.reduced(i, r.pivot_columns[i]) == 1);
    }
  }
}

TEST_CASE("rank agrees with counting the row space for tiny matrices") {
  std::mt19937_64 rng(4);
  for (const std::uint32_t q : {2u, 3u}) {
    const FieldSpec f(q);
    for (int t = 0; t < 60; ++t) {
      const std::size_t rows = 1 + t % 3;
      const std::size_t cols = 1 + (t / 3) % 4;
      const auto m = random_matrix(rng, f, rows, cols);
      std::set<Vec> span;
      std::size_t combos = 1;
      for (std::size_t i = 0; i < rows; ++i) combos *= q;
      for (std::size_t idx = 0; idx < combos; ++idx) {
        Vec v(cols, 0);
        std::size_t x = idx;
        for (std::size_t r = 0; r < rows; ++r, x /= q) {
          for (std::size_t c = 0; c < cols; ++c) v[c] = f.add(v[c], f.mul(static_cast<Residue>(x % q), m(r, c)));
        }
        span.insert(v);
      }
      std::size_t expected = 0;
      for (std::size_t s = 1; s < span.size(); s *= q) ++expected;
      REQUIRE(rank(m) == expected);
    }
  }
}

TEST_CASE("elimination keeps the last row of an upper-triangular shift matrix") {
  const FieldSpec f5(5);
  const auto G = M(f5, {{3, 2, 1, 0, 0}, {0, 3, 2, 1, 0}, {0, 0, 3, 2, 1}});
  const auto R = rref(G).reduced;
  const Residue s = f5.div(R(2, 2), G(2, 2));
  for (std::size_t c = 0; c < 5; ++c) CHECK(R(2, c) == f5.mul(s, G(2, c)));
}

TEST_CASE("nullspace") {
  const FieldSpec f5(5);
  const auto m = M(f5, {{1, 2, 3}, {0, 1, 4}});
  const auto ns = nullspace(m);
  CHECK(ns.rows() == 1);
  for (std::size_t r = 0; r < ns.rows(); ++r) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Residue acc = 0;
      for (std::size_t c = 0; c < 3; ++c) acc = f5.add(acc, f5.mul(m(i, c), ns(r, c)));
      CHECK(acc == 0);
    }
  }
  CHECK(nullspace(MatrixFq::identity(f5, 3)).rows() == 0);
  CHECK(nullspace(MatrixFq(f5, 0, 4)).rows() == 4);
}

TEST_CASE("incremental echelon basis") {
  const FieldSpec f7(7);
  EchelonBasis b(f7, 3);
  CHECK(b.insert(V({0, 2, 4})));
  CHECK_FALSE(b.insert(V({0, 1, 2})));
  CHECK(b.contains(V({0, 3, 6})));
  CHECK_FALSE(b.contains(V({1, 0, 0})));
  CHECK(b.insert(V({1, 1, 1})));
  CHECK(b.insert(V({0, 0, 5})));
  CHECK(b.full());
  CHECK(b.to_rref() == MatrixFq::identity(f7, 3));
}
