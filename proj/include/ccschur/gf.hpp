#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace ccschur {

/// Canonical residue in [0, q).
using Residue = std::uint32_t;

/// A prime field F_q with q < 2^31. Products of two residues fit in 64 bits.
class FieldSpec {
 public:
  static constexpr std::uint32_t kMaxModulus = (1u << 31) - 1;

  /// Throws NotPrime unless q is a prime below 2^31.
  explicit FieldSpec(std::uint32_t q);

  std::uint32_t q() const noexcept { return q_; }

  /// Maps any signed integer to its residue mod q.
  Residue reduce(std::int64_t v) const noexcept {
    const std::int64_t r = v % static_cast<std::int64_t>(q_);
    return static_cast<Residue>(r < 0 ? r + q_ : r);
  }

  Residue add(Residue x, Residue y) const noexcept {
    const std::uint32_t s = x + y;
    return s >= q_ ? s - q_ : s;
  }
  Residue sub(Residue x, Residue y) const noexcept { return x >= y ? x - y : x + q_ - y; }
  Residue neg(Residue x) const noexcept { return x == 0 ? 0 : q_ - x; }
  Residue mul(Residue x, Residue y) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(x) * y % q_);
  }
  /// Throws DivisionByZero for x = 0.
  Residue inv(Residue x) const;
  Residue div(Residue x, Residue y) const { return mul(x, inv(y)); }
  /// Square-and-multiply; negative exponents go through the inverse.
  Residue pow(Residue x, std::int64_t e) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Prime factors of n (each listed once, ascending), by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// A field element that remembers which field it belongs to. Mixing fields
/// throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldSpec field, std::int64_t value) : field_(field), v_(field.reduce(value)) {}

  Residue value() const noexcept { return v_; }
  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return v_ == 0; }

  FieldElement inv() const;
  FieldElement pow(std::int64_t e) const;

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
  FieldElement operator-() const { return FieldElement(field_, field_.neg(v_)); }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  FieldSpec field_;
  Residue v_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// Smallest l >= 1 with a^l = 1. Throws ZeroElement for a = 0.
std::uint64_t multiplicative_order(const FieldElement& a);

/// Same as above on a raw residue of `field`.
std::uint64_t multiplicative_order(const FieldSpec& field, Residue a);

}  // namespace ccschur
