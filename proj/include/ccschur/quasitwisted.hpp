#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ccschur/schur.hpp"

namespace ccschur {

/// (c_0..c_{n-1}) -> (a c_{n-t}, ..., a c_{n-1}, c_0, ..., c_{n-t-1}).
/// Throws DimensionMismatch unless t divides the length.
Vec block_shift(std::span<const Residue> c, std::size_t t, Residue a, const FieldSpec& field);

/// (c_i, c_{t+i}, ..., c_{(m-1)t+i}). Throws IndexOutOfRange for i >= t.
Vec project(std::span<const Residue> c, std::size_t i, std::size_t t, std::size_t m);

/// A code closed under the block shift with parameter t, t | n.
class QuasiTwistedCode {
 public:
  /// Throws DimensionMismatch (t does not divide n), InvalidRing or
  /// NotQuasiTwisted (basis not closed).
  QuasiTwistedCode(FieldSpec field, std::size_t n, std::size_t t, std::int64_t a, const MatrixFq& rows);

  const FieldSpec& field() const noexcept { return block_ring_.field(); }
  std::size_t n() const noexcept { return n_; }
  std::size_t t() const noexcept { return t_; }
  std::size_t m() const noexcept { return n_ / t_; }
  Residue a() const noexcept { return block_ring_.a(); }
  /// F_q[x]/(x^m - a), the ring of each projected block.
  const RingSpec& block_ring() const noexcept { return block_ring_; }
  const MatrixFq& basis() const noexcept { return basis_; }

 private:
  std::size_t n_;
  std::size_t t_;
  RingSpec block_ring_;
  MatrixFq basis_;
};

/// P_i(Q) for i = 0..t-1, each a constacyclic code of F_q[x]/(x^m - a).
/// Throws ProjectionNotConstacyclic if a projection fails the shift test.
std::vector<SpanCode> decompose(const QuasiTwistedCode& Q);

/// Interleaves codewords of t codes of length m: position j t + i holds
/// entry j of the i-th word. Used to build quasi-twisted codes from blocks.
MatrixFq interleave(const std::vector<SpanCode>& blocks);

}  // namespace ccschur
