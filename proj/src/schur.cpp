#include "ccschur/schur.hpp"

#include <optional>
#include <string>
#include <unordered_set>

#include "ccschur/errors.hpp"

namespace ccschur {

namespace {

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const auto x : v) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

SpanCode::SpanCode(RingSpec ring, const MatrixFq& rows) : ring_(ring), basis_(row_basis(rows)) {
  if (rows.cols() != ring_.n()) throw DimensionMismatch("span width differs from ring length");
  if (!(rows.field() == ring_.field())) throw FieldMismatch("span and ring over different fields");
}

Vec schur_vec(std::span<const Residue> c, std::span<const Residue> d, const FieldSpec& field) {
  if (c.size() != d.size()) {
    throw DimensionMismatch("Schur product of lengths " + std::to_string(c.size()) + " and " + std::to_string(d.size()));
  }
  Vec out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = field.mul(c[i], d[i]);
  return out;
}

SpanCode code_product(const SpanCode& A, const SpanCode& B) {
  if (!(A.ring() == B.ring())) throw RingMismatch("Schur product of codes over different rings");
  const auto& ring = A.ring();
  const auto& f = ring.field();
  EchelonBasis acc(f, ring.n());
  // Products of shift bases repeat heavily, including up to scalars; rows are
  // normalized to a leading 1 and deduplicated before elimination.
  std::unordered_set<Vec, VecHash> seen;
  for (std::size_t i = 0; i < A.dimension() && !acc.full(); ++i) {
    const auto a = A.basis().row(i);
    for (std::size_t j = 0; j < B.dimension() && !acc.full(); ++j) {
      Vec prod = schur_vec(a, B.basis().row(j), f);
      std::size_t lead = 0;
      while (lead < prod.size() && prod[lead] == 0) ++lead;
      if (lead == prod.size()) continue;
      const Residue s = f.inv(prod[lead]);
      for (auto& x : prod) x = f.mul(x, s);
      if (!seen.insert(prod).second) continue;
      acc.insert(prod);
    }
  }
  return SpanCode(ring, acc.to_rref());
}

SpanCode code_power(const SpanCode& C, std::uint64_t e) {
  if (e == 0) throw InvalidArgument("Schur power exponent must be at least 1");
  std::optional<SpanCode> result;
  SpanCode base = C;
  while (true) {
    if (e & 1) result = result ? code_product(*result, base) : base;
    e >>= 1;
    if (e == 0) break;
    base = code_product(base, base);
  }
  return *result;
}

SpanCode code_power(const ConstacyclicCode& C, std::uint64_t e) { return code_power(SpanCode(C), e); }

Poly poly_schur_power(const Poly& p, const RingSpec& ring, std::uint64_t e) {
  if (e == 0) throw InvalidArgument("Schur power exponent must be at least 1");
  const auto& f = ring.field();
  Vec v = ring_reduce(p, ring).embed(ring.n());
  // a^e only depends on e mod (q - 1) for nonzero a; keep e >= 1 so 0^e = 0.
  const std::uint64_t period = f.q() - 1;
  const std::uint64_t reduced = (e - 1) % period + 1;
  for (auto& x : v) x = f.pow(x, static_cast<std::int64_t>(reduced));
  return Poly(f, std::move(v));
}

bool has_disjoint_support_basis(const SpanCode& C) {
  const auto& b = C.basis();
  std::vector<bool> used(b.cols(), false);
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      if (b(r, c) == 0) continue;
      if (used[c]) return false;
      used[c] = true;
    }
  }
  return true;
}

}  // namespace ccschur
