#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "ccschur/code.hpp"

namespace ccschur {

/// A linear code in F_q^n tied to a ring, not necessarily constacyclic.
/// The basis is always the canonical RREF with no zero rows.
class SpanCode {
 public:
  /// Canonicalizes `rows`. Throws DimensionMismatch if widths differ from n.
  SpanCode(RingSpec ring, const MatrixFq& rows);
  explicit SpanCode(const ConstacyclicCode& c) : ring_(c.ring()), basis_(c.basis()) {}

  static SpanCode zero(const RingSpec& ring) { return SpanCode(ring, MatrixFq(ring.field(), 0, ring.n())); }
  static SpanCode full(const RingSpec& ring) { return SpanCode(ring, MatrixFq::identity(ring.field(), ring.n())); }

  const RingSpec& ring() const noexcept { return ring_; }
  const MatrixFq& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.rows(); }

  bool contains(std::span<const Residue> v) const { return in_row_space(basis_, v); }

  /// Same ring and same row space.
  friend bool operator==(const SpanCode&, const SpanCode&) = default;

 private:
  RingSpec ring_;
  MatrixFq basis_;
};

/// Component-wise product. Throws DimensionMismatch on unequal lengths.
Vec schur_vec(std::span<const Residue> c, std::span<const Residue> d, const FieldSpec& field);

/// span{a * b : a in A, b in B}. Throws RingMismatch.
SpanCode code_product(const SpanCode& A, const SpanCode& B);

/// C^<e> by binary decomposition of e. Throws InvalidArgument for e = 0.
SpanCode code_power(const SpanCode& C, std::uint64_t e);
SpanCode code_power(const ConstacyclicCode& C, std::uint64_t e);

/// Coefficient-wise e-th power of the length-n embedding of p mod x^n - a.
Poly poly_schur_power(const Poly& p, const RingSpec& ring, std::uint64_t e);

/// True iff the rows of the canonical basis have pairwise disjoint supports.
bool has_disjoint_support_basis(const SpanCode& C);

}  // namespace ccschur
