#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccschur/gf.hpp"

namespace ccschur {

/// Dense polynomial over F_q, constant term first. Always trimmed: the zero
/// polynomial has no coefficients and degree kZeroDegree.
class Poly {
 public:
  static constexpr long kZeroDegree = -1;

  explicit Poly(FieldSpec field) : field_(field) {}
  /// Coefficients are reduced mod q and trailing zeros dropped.
  Poly(FieldSpec field, const std::vector<std::int64_t>& coeffs);
  Poly(FieldSpec field, std::vector<Residue> coeffs);

  static Poly constant(FieldSpec field, Residue c) { return Poly(field, std::vector<Residue>{c}); }
  static Poly monomial(FieldSpec field, std::size_t degree, Residue c = 1);

  const FieldSpec& field() const noexcept { return field_; }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::span<const Residue> coeffs() const noexcept { return c_; }
  /// Coefficient of x^i; zero past the degree.
  Residue coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Residue leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

  /// Length-n coefficient embedding. Throws DimensionMismatch if deg >= n.
  std::vector<Residue> embed(std::size_t n) const;

  Poly scaled(Residue s) const;
  Poly monic() const;
  /// Scales so the constant term is 1. Throws ZeroElement if p(0) = 0.
  Poly unit_constant() const;
  Residue evaluate(Residue x) const noexcept;
  Poly derivative() const;

  friend Poly operator+(const Poly& x, const Poly& y);
  friend Poly operator-(const Poly& x, const Poly& y);
  friend Poly operator*(const Poly& x, const Poly& y);

  friend bool operator==(const Poly&, const Poly&) = default;

  /// e.g. "x^4+2*x^3+x+2"; zero prints as "0".
  std::string to_string() const;

 private:
  void trim();

  FieldSpec field_;
  std::vector<Residue> c_;
};

/// Long division. Throws DivisionByZero if den = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den);

Poly poly_mod(const Poly& num, const Poly& den);
bool divides(const Poly& d, const Poly& p);
/// Monic gcd (zero if both are zero).
Poly poly_gcd(Poly x, Poly y);
Poly mulmod(const Poly& x, const Poly& y, const Poly& mod);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod);

/// Canonical ordering: by degree, then coefficient vector lexicographically
/// (constant term first).
bool canonical_less(const Poly& x, const Poly& y);

/// Parses "x^4+2*x^3+x+2" or a coefficient list "[2,1,0,2,1]"
/// (constant first). Coefficients are reduced mod q.
Poly parse_poly(std::string_view text, FieldSpec field);

/// The quotient ring F_q[x]/(x^n - a), a != 0. Codes given by a generator
/// work for any n; factoring and divisor enumeration need gcd(n, q) = 1.
class RingSpec {
 public:
  /// Throws InvalidRing (n = 0 or a = 0).
  RingSpec(FieldSpec field, std::size_t n, std::int64_t a);

  static RingSpec cyclic(FieldSpec field, std::size_t n) { return RingSpec(field, n, 1); }
  static RingSpec negacyclic(FieldSpec field, std::size_t n) { return RingSpec(field, n, -1); }

  const FieldSpec& field() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return field_.q(); }
  std::size_t n() const noexcept { return n_; }
  Residue a() const noexcept { return a_; }
  /// Multiplicative order of a.
  std::uint64_t ell() const noexcept { return ell_; }

  /// x^n - a.
  Poly modulus() const;

  /// gcd(n, q) = 1, so x^n - a is squarefree and ideals are all constacyclic codes.
  bool coprime() const noexcept;
  /// Throws NotCoprime unless coprime().
  void require_coprime() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  FieldSpec field_;
  std::size_t n_;
  Residue a_;
  std::uint64_t ell_;
};

/// Representative of p mod (x^n - a) of degree < n.
Poly ring_reduce(const Poly& p, const RingSpec& ring);

/// Monic irreducible factors of x^n - a, sorted canonically. Throws NotCoprime. Equal-degree
/// splitting draws from a generator seeded with `seed`; output does not
/// depend on it.
std::vector<Poly> factor_modulus(const RingSpec& ring, std::uint64_t seed = 0);

/// Irreducible factors of an arbitrary monic squarefree polynomial.
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t seed = 0);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

struct DivisorQuery {
  /// Keep at most this many, in canonical order, after filtering.
  std::optional<std::size_t> max_count;
  /// Keep divisors with k/n < bound (strict), k = n - deg g.
  std::optional<Rational> rate_bound;
};

/// Subsets of 2^factors beyond this are refused with TooManyDivisors.
inline constexpr std::size_t kMaxDivisorFactors = 28;
/// enumerate_divisors refuses (TooManyDivisors) to materialize more than this.
inline constexpr std::uint64_t kMaxDivisorCount = std::uint64_t{1} << 21;

/// Every subset product of `factors`, in canonical order (includes 1 and the
/// full product).
std::vector<Poly> all_subset_products(const std::vector<Poly>& factors);

/// Monic divisors of x^n - a other than x^n - a itself, filtered by the query.
/// The constant 1 appears only if the rate bound admits k = n.
std::vector<Poly> enumerate_divisors(const RingSpec& ring, const DivisorQuery& query = {},
                                     std::uint64_t seed = 0);

/// Divisor count matching enumerate_divisors without the max_count cap,
/// computed from factor degrees alone.
std::uint64_t count_divisors(const std::vector<Poly>& factors, std::size_t n,
                             const std::optional<Rational>& rate_bound);

}  // namespace ccschur
