#include "ccschur/gf.hpp"

#include <ostream>
#include <string>

#include "ccschur/errors.hpp"

namespace ccschur {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

FieldSpec::FieldSpec(std::uint32_t q) : q_(q) {
  if (q > kMaxModulus || !is_prime(q)) {
    throw NotPrime("field modulus " + std::to_string(q) + " is not a prime below 2^31");
  }
}

Residue FieldSpec::inv(Residue x) const {
  if (x == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
  // Extended Euclid on (q, x).
  std::int64_t r0 = q_, r1 = x, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    std::int64_t tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - quot * t1;
    t0 = t1;
    t1 = tmp;
  }
  return reduce(t0);
}

Residue FieldSpec::pow(Residue x, std::int64_t e) const {
  if (e < 0) {
    x = inv(x);
    e = -e;
  }
  Residue result = 1 % q_;
  Residue base = x;
  auto ue = static_cast<std::uint64_t>(e);
  while (ue != 0) {
    if (ue & 1) result = mul(result, base);
    base = mul(base, base);
    ue >>= 1;
  }
  return result;
}

namespace {

void check_same(const FieldElement& x, const FieldElement& y) {
  if (!(x.field() == y.field())) {
    throw FieldMismatch("operands from F_" + std::to_string(x.field().q()) + " and F_" +
                        std::to_string(y.field().q()));
  }
}

}  // namespace

FieldElement FieldElement::inv() const { return FieldElement(field_, field_.inv(v_)); }

FieldElement FieldElement::pow(std::int64_t e) const { return FieldElement(field_, field_.pow(v_, e)); }

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  check_same(x, y);
  return FieldElement(x.field_, x.field_.add(x.v_, y.v_));
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  check_same(x, y);
  return FieldElement(x.field_, x.field_.sub(x.v_, y.v_));
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  check_same(x, y);
  return FieldElement(x.field_, x.field_.mul(x.v_, y.v_));
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) {
  check_same(x, y);
  return FieldElement(x.field_, x.field_.div(x.v_, y.v_));
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.value(); }

std::uint64_t multiplicative_order(const FieldSpec& field, Residue a) {
  if (a % field.q() == 0) throw ZeroElement("multiplicative order of zero");
  std::uint64_t order = field.q() - 1;
  for (const std::uint64_t p : prime_factors(order)) {
    while (order % p == 0 && field.pow(a, static_cast<std::int64_t>(order / p)) == 1) {
      order /= p;
    }
  }
  return order;
}

std::uint64_t multiplicative_order(const FieldElement& a) {
  return multiplicative_order(a.field(), a.value());
}

}  // namespace ccschur
