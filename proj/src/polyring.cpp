#include "ccschur/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>

#include "ccschur/errors.hpp"

namespace ccschur {

namespace {

void require_same_field(const Poly& x, const Poly& y) {
  if (!(x.field() == y.field())) {
    throw FieldMismatch("polynomials over F_" + std::to_string(x.field().q()) + " and F_" +
                        std::to_string(y.field().q()));
  }
}

}  // namespace

Poly::Poly(FieldSpec field, const std::vector<std::int64_t>& coeffs) : field_(field) {
  c_.reserve(coeffs.size());
  for (const auto v : coeffs) c_.push_back(field_.reduce(v));
  trim();
}

Poly::Poly(FieldSpec field, std::vector<Residue> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (auto& v : c_) v %= field_.q();
  trim();
}

Poly Poly::monomial(FieldSpec field, std::size_t degree, Residue c) {
  std::vector<Residue> v(degree + 1, 0);
  v[degree] = c;
  return Poly(field, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::vector<Residue> Poly::embed(std::size_t n) const {
  if (c_.size() > n) {
    throw DimensionMismatch("polynomial of degree " + std::to_string(degree()) +
                            " does not embed in length " + std::to_string(n));
  }
  std::vector<Residue> v(c_);
  v.resize(n, 0);
  return v;
}

Poly Poly::scaled(Residue s) const {
  std::vector<Residue> v(c_);
  for (auto& x : v) x = field_.mul(x, s);
  return Poly(field_, std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

Poly Poly::unit_constant() const {
  if (coeff(0) == 0) throw ZeroElement("polynomial has zero constant term");
  return scaled(field_.inv(coeff(0)));
}

Residue Poly::evaluate(Residue x) const noexcept {
  Residue acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Residue> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = field_.mul(c_[i], field_.reduce(static_cast<std::int64_t>(i)));
  return Poly(field_, std::move(v));
}

Poly operator+(const Poly& x, const Poly& y) {
  require_same_field(x, y);
  const auto& f = x.field_;
  std::vector<Residue> v(std::max(x.c_.size(), y.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(x.coeff(i), y.coeff(i));
  return Poly(f, std::move(v));
}

Poly operator-(const Poly& x, const Poly& y) {
  require_same_field(x, y);
  const auto& f = x.field_;
  std::vector<Residue> v(std::max(x.c_.size(), y.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(x.coeff(i), y.coeff(i));
  return Poly(f, std::move(v));
}

Poly operator*(const Poly& x, const Poly& y) {
  require_same_field(x, y);
  const auto& f = x.field_;
  if (x.is_zero() || y.is_zero()) return Poly(f);
  const std::uint64_t q = f.q();
  std::vector<std::uint64_t> acc(x.c_.size() + y.c_.size() - 1, 0);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(x.c_[i]) * y.c_[j]) % q;
    }
  }
  std::vector<Residue> v(acc.begin(), acc.end());
  return Poly(f, std::move(v));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Residue c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
  require_same_field(num, den);
  if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
  const auto& f = num.field();
  if (num.degree() < den.degree()) return {Poly(f), num};
  std::vector<Residue> rem(num.coeffs().begin(), num.coeffs().end());
  const std::size_t dd = static_cast<std::size_t>(den.degree());
  const Residue lead_inv = f.inv(den.leading());
  std::vector<Residue> quot(rem.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Residue c = f.mul(rem[i], lead_inv);
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(c, den.coeff(j)));
    }
  }
  rem.resize(dd);
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly poly_mod(const Poly& num, const Poly& den) { return poly_divmod(num, den).second; }

bool divides(const Poly& d, const Poly& p) { return poly_mod(p, d).is_zero(); }

Poly poly_gcd(Poly x, Poly y) {
  require_same_field(x, y);
  while (!y.is_zero()) {
    Poly r = poly_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly mulmod(const Poly& x, const Poly& y, const Poly& mod) { return poly_mod(x * y, mod); }

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
  Poly result = poly_mod(Poly::constant(base.field(), 1), mod);
  Poly b = poly_mod(base, mod);
  while (e != 0) {
    if (e & 1) result = mulmod(result, b, mod);
    e >>= 1;
    if (e != 0) b = mulmod(b, b, mod);
  }
  return result;
}

bool canonical_less(const Poly& x, const Poly& y) {
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  const auto cx = x.coeffs();
  const auto cy = y.coeffs();
  return std::lexicographical_compare(cx.begin(), cx.end(), cy.begin(), cy.end());
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct PolyParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("cannot parse polynomial '" + std::string(s) + "': " + msg);
  }
  std::int64_t number() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a number at offset " + std::to_string(start));
    if (pos - start > 18) fail("number too large");
    return std::stoll(std::string(s.substr(start, pos - start)));
  }
};

Poly parse_coefficient_list(std::string_view text, FieldSpec field) {
  PolyParser p{text};
  std::vector<std::int64_t> coeffs;
  if (p.peek() != '[') p.fail("expected '['");
  ++p.pos;
  if (p.peek() == ']') {
    ++p.pos;
  } else {
    while (true) {
      bool negative = false;
      if (p.peek() == '-') {
        negative = true;
        ++p.pos;
      }
      const auto v = p.number();
      coeffs.push_back(negative ? -v : v);
      const char c = p.peek();
      ++p.pos;
      if (c == ']') break;
      if (c != ',') p.fail("expected ',' or ']'");
    }
  }
  if (!p.at_end()) p.fail("trailing characters");
  return Poly(field, coeffs);
}

}  // namespace

Poly parse_poly(std::string_view text, FieldSpec field) {
  PolyParser p{text};
  if (p.at_end()) p.fail("empty input");
  if (p.peek() == '[') return parse_coefficient_list(text, field);

  std::vector<std::int64_t> acc;
  auto add_term = [&](std::size_t exp, std::int64_t coeff) {
    if (exp > 1'000'000) p.fail("exponent too large");
    if (acc.size() <= exp) acc.resize(exp + 1, 0);
    acc[exp] = static_cast<std::int64_t>(field.add(field.reduce(acc[exp]), field.reduce(coeff)));
  };

  bool first = true;
  while (!p.at_end()) {
    int sign = 1;
    const char c = p.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++p.pos;
    } else if (!first) {
      p.fail("expected '+' or '-' at offset " + std::to_string(p.pos));
    }
    first = false;

    std::int64_t coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
      coeff = p.number();
      have_coeff = true;
      if (p.peek() == '*') {
        ++p.pos;
        if (p.peek() != 'x' && p.peek() != 'X') p.fail("expected 'x' after '*'");
      }
    }
    std::size_t exp = 0;
    if (p.peek() == 'x' || p.peek() == 'X') {
      ++p.pos;
      exp = 1;
      if (p.peek() == '^') {
        ++p.pos;
        exp = static_cast<std::size_t>(p.number());
      }
    } else if (!have_coeff) {
      p.fail("expected a term at offset " + std::to_string(p.pos));
    }
    add_term(exp, sign * coeff);
  }
  return Poly(field, acc);
}

// ---------------------------------------------------------------------------
// Quotient ring

RingSpec::RingSpec(FieldSpec field, std::size_t n, std::int64_t a) : field_(field), n_(n), a_(field.reduce(a)) {
  if (n == 0) throw InvalidRing("block length must be positive");
  if (a_ == 0) throw InvalidRing("constacyclic constant a must be nonzero");
  ell_ = multiplicative_order(field_, a_);
}

bool RingSpec::coprime() const noexcept {
  return std::gcd(static_cast<std::uint64_t>(n_), static_cast<std::uint64_t>(field_.q())) == 1;
}

void RingSpec::require_coprime() const {
  if (!coprime()) {
    throw NotCoprime("n = " + std::to_string(n_) + " is not coprime to q = " + std::to_string(field_.q()));
  }
}

Poly RingSpec::modulus() const {
  std::vector<Residue> v(n_ + 1, 0);
  v[0] = field_.neg(a_);
  v[n_] = 1;
  return Poly(field_, std::move(v));
}

Poly ring_reduce(const Poly& p, const RingSpec& ring) {
  if (!(p.field() == ring.field())) throw FieldMismatch("polynomial and ring over different fields");
  const std::size_t n = ring.n();
  if (p.degree() < static_cast<long>(n)) return p;
  const auto& f = ring.field();
  std::vector<Residue> out(n, 0);
  const auto c = p.coeffs();
  // x^(bn + j) = a^b x^j
  Residue scale = 1;
  for (std::size_t block = 0; block * n < c.size(); ++block) {
    for (std::size_t j = 0; j < n && block * n + j < c.size(); ++j) {
      out[j] = f.add(out[j], f.mul(scale, c[block * n + j]));
    }
    scale = f.mul(scale, ring.a());
  }
  return Poly(f, std::move(out));
}

// ---------------------------------------------------------------------------
// Factorization (distinct-degree, then equal-degree splitting)

namespace {

void equal_degree_split(const Poly& g, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
  const std::size_t deg = static_cast<std::size_t>(g.degree());
  if (deg == d) {
    out.push_back(g.monic());
    return;
  }
  const auto& f = g.field();
  const std::uint32_t q = f.q();
  std::uniform_int_distribution<std::uint32_t> coin(0, q - 1);
  const Poly one = Poly::constant(f, 1);
  while (true) {
    std::vector<Residue> rc(deg);
    for (auto& c : rc) c = coin(rng);
    const Poly r(f, std::move(rc));
    if (r.degree() < 1) continue;

    Poly candidate(f);
    if (q == 2) {
      // Trace r + r^2 + ... + r^(2^(d-1)).
      Poly term = r;
      Poly trace = r;
      for (std::size_t i = 1; i < d; ++i) {
        term = mulmod(term, term, g);
        trace = trace + term;
      }
      candidate = trace;
    } else {
      // r^((q^d - 1)/2) = (r * r^q * ... * r^(q^(d-1)))^((q-1)/2)
      Poly frob = r;
      Poly norm = r;
      for (std::size_t i = 1; i < d; ++i) {
        frob = powmod(frob, q, g);
        norm = mulmod(norm, frob, g);
      }
      candidate = powmod(norm, (q - 1) / 2, g) - one;
    }
    const Poly u = poly_gcd(g, candidate);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree_split(u, d, rng, out);
      equal_degree_split(poly_divmod(g, u).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& input, std::uint64_t seed) {
  if (input.is_zero()) throw InvalidArgument("cannot factor the zero polynomial");
  const auto& f = input.field();
  std::mt19937_64 rng(seed);
  std::vector<Poly> out;
  Poly rest = input.monic();
  const Poly x = Poly::monomial(f, 1);
  Poly h = poly_mod(x, rest.degree() > 0 ? rest : Poly::constant(f, 1));
  for (std::size_t d = 1; rest.degree() >= static_cast<long>(2 * d); ++d) {
    h = powmod(h, f.q(), rest);
    const Poly g = poly_gcd(rest, h - x);
    if (g.degree() > 0) {
      equal_degree_split(g, d, rng, out);
      rest = poly_divmod(rest, g).first;
      h = poly_mod(h, rest);
    }
  }
  if (rest.degree() > 0) out.push_back(rest.monic());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Poly> factor_modulus(const RingSpec& ring, std::uint64_t seed) {
  // gcd(n, q) = 1 makes x^n - a squarefree.
  ring.require_coprime();
  return factor_squarefree(ring.modulus(), seed);
}

std::vector<Poly> all_subset_products(const std::vector<Poly>& factors) {
  if (factors.size() > kMaxDivisorFactors) {
    throw TooManyDivisors(std::to_string(factors.size()) + " irreducible factors; subset enumeration refused");
  }
  if (factors.empty()) return {};
  const auto& f = factors.front().field();
  std::vector<Poly> out;
  const std::size_t total = std::size_t{1} << factors.size();
  out.reserve(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    Poly p = Poly::constant(f, 1);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (mask >> i & 1) p = p * factors[i];
    }
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {

bool rate_admits(std::size_t k, std::size_t n, const std::optional<Rational>& bound) {
  if (!bound) return true;
  // k/n < num/den
  return static_cast<__int128>(k) * bound->den < static_cast<__int128>(bound->num) * static_cast<__int128>(n);
}

}  // namespace

std::vector<Poly> enumerate_divisors(const RingSpec& ring, const DivisorQuery& query, std::uint64_t seed) {
  if (query.rate_bound && query.rate_bound->den <= 0) throw InvalidArgument("rate bound denominator must be positive");
  const auto factors = factor_modulus(ring, seed);
  if (factors.size() > kMaxDivisorFactors) {
    throw TooManyDivisors("x^" + std::to_string(ring.n()) + " - a has " + std::to_string(factors.size()) +
                          " irreducible factors over F_" + std::to_string(ring.q()));
  }
  const std::size_t n = ring.n();
  if (const auto count = count_divisors(factors, n, query.rate_bound); count > kMaxDivisorCount) {
    throw TooManyDivisors(std::to_string(count) + " divisors of x^" + std::to_string(n) + " - a over F_" +
                          std::to_string(ring.q()) + " pass the filter");
  }
  const auto& f = ring.field();
  std::vector<Poly> out;
  const std::size_t total = std::size_t{1} << factors.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::size_t deg = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (mask >> i & 1) deg += static_cast<std::size_t>(factors[i].degree());
    }
    if (deg == n) continue;  // zero code
    if (!rate_admits(n - deg, n, query.rate_bound)) continue;
    Poly p = Poly::constant(f, 1);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (mask >> i & 1) p = p * factors[i];
    }
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  if (query.max_count && out.size() > *query.max_count) out.erase(out.begin() + static_cast<std::ptrdiff_t>(*query.max_count), out.end());
  return out;
}

std::uint64_t count_divisors(const std::vector<Poly>& factors, std::size_t n, const std::optional<Rational>& rate_bound) {
  // ways[d] = number of factor subsets whose degrees sum to d
  std::vector<std::uint64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (const auto& fac : factors) {
    const auto d = static_cast<std::size_t>(fac.degree());
    for (std::size_t s = n + 1; s-- > d;) ways[s] += ways[s - d];
  }
  std::uint64_t count = 0;
  for (std::size_t deg = 0; deg < n; ++deg) {
    if (rate_admits(n - deg, n, rate_bound)) count += ways[deg];
  }
  return count;
}

}  // namespace ccschur
