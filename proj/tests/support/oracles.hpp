#pragma once
// Brute-force references the library is checked against. Nothing here calls
// the routine it is meant to confirm.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ccschur/analysis.hpp"

namespace ccschur::oracle {

/// Degrees of the irreducible factors of x^n - a over F_q, from the orbits of
/// e -> q e on {e mod n ell : e = 1 mod ell}. Requires gcd(n, q) = 1.
std::vector<std::size_t> factor_degrees(std::uint32_t q, std::size_t n, std::uint64_t ell);

/// Divisors g != x^n - a with k/n < num/den, from factor degrees by counting
/// subsets directly (no shared DP with the library).
std::uint64_t divisors_below_rate(const std::vector<std::size_t>& degrees, std::size_t n, std::int64_t num,
                                  std::int64_t den);

/// Pattern polynomial straight from its definition: among divisors h of g with
/// h(0) = 1, deg h = n - v, v | n and x^i h (i < v) of pairwise disjoint
/// support, the one of highest degree. `modulus_divisors` must list every
/// monic divisor of x^n - a.
PatternInfo pattern_by_definition(const ConstacyclicCode& C, const std::vector<Poly>& modulus_divisors);

/// C^<e> as e - 1 successive products with C.
SpanCode naive_power(const SpanCode& C, std::uint64_t e);

/// span{c * d : c in A, d in B} over every pair of codewords.
SpanCode product_by_codewords(const SpanCode& A, const SpanCode& B);

/// Smallest t >= 1 with C^<(r'+t) ell + 1> = C^<r' ell + 1>, up to max_t.
std::optional<std::uint64_t> cycle_length_by_spans(const ConstacyclicCode& C, std::uint64_t max_t);

/// Cyclic codes with C^<2> = C found by testing every divisor of x^n - 1.
std::vector<Poly> invariant_cyclic_by_search(const FieldSpec& field, std::size_t n);

/// Runs the structural checks on one code; returns one line per violation.
/// Enumeration-based checks run when q^dim <= budget.
std::vector<std::string> invariant_violations(const ConstacyclicCode& C, std::uint64_t budget = 10'000);

/// A random nonzero divisor code with q <= max_q prime and n <= max_n,
/// gcd(n, q) = 1, a drawn from F_q^*.
ConstacyclicCode random_divisor_code(std::mt19937_64& rng, std::uint32_t max_q = 13, std::size_t max_n = 12);

}  // namespace ccschur::oracle
