#include "ccschur/quasitwisted.hpp"

#include <string>

#include "ccschur/errors.hpp"

namespace ccschur {

Vec block_shift(std::span<const Residue> c, std::size_t t, Residue a, const FieldSpec& field) {
  const std::size_t n = c.size();
  if (t == 0 || n % t != 0) {
    throw DimensionMismatch("block parameter " + std::to_string(t) + " does not divide length " + std::to_string(n));
  }
  Vec out(n);
  for (std::size_t j = 0; j < t; ++j) out[j] = field.mul(a, c[n - t + j]);
  for (std::size_t j = 0; j + t < n; ++j) out[j + t] = c[j];
  return out;
}

Vec project(std::span<const Residue> c, std::size_t i, std::size_t t, std::size_t m) {
  if (i >= t) throw IndexOutOfRange("block index " + std::to_string(i) + " out of range for t = " + std::to_string(t));
  if (c.size() != t * m) throw DimensionMismatch("vector length differs from t * m");
  Vec out(m);
  for (std::size_t j = 0; j < m; ++j) out[j] = c[j * t + i];
  return out;
}

namespace {

RingSpec make_block_ring(FieldSpec field, std::size_t n, std::size_t t, std::int64_t a) {
  if (t == 0 || n % t != 0) {
    throw DimensionMismatch("block parameter " + std::to_string(t) + " does not divide length " + std::to_string(n));
  }
  return RingSpec(field, n / t, a);
}

}  // namespace

QuasiTwistedCode::QuasiTwistedCode(FieldSpec field, std::size_t n, std::size_t t, std::int64_t a, const MatrixFq& rows)
    : n_(n), t_(t), block_ring_(make_block_ring(field, n, t, a)), basis_(row_basis(rows)) {
  if (rows.cols() != n) throw DimensionMismatch("basis width differs from n");
  EchelonBasis span(field, n);
  for (std::size_t r = 0; r < basis_.rows(); ++r) span.insert(basis_.row(r));
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    if (!span.contains(block_shift(basis_.row(r), t_, block_ring_.a(), field))) {
      throw NotQuasiTwisted("basis is not closed under the block shift");
    }
  }
}

std::vector<SpanCode> decompose(const QuasiTwistedCode& Q) {
  std::vector<SpanCode> out;
  const auto& ring = Q.block_ring();
  for (std::size_t i = 0; i < Q.t(); ++i) {
    MatrixFq rows(Q.field(), 0, Q.m());
    for (std::size_t r = 0; r < Q.basis().rows(); ++r) rows.append_row(project(Q.basis().row(r), i, Q.t(), Q.m()));
    SpanCode block(ring, rows);
    if (!is_constacyclic(block.basis(), ring)) {
      throw ProjectionNotConstacyclic("projection " + std::to_string(i) + " is not constacyclic");
    }
    out.push_back(std::move(block));
  }
  return out;
}

MatrixFq interleave(const std::vector<SpanCode>& blocks) {
  if (blocks.empty()) throw InvalidArgument("nothing to interleave");
  const auto& ring = blocks.front().ring();
  const std::size_t t = blocks.size();
  const std::size_t m = ring.n();
  MatrixFq out(ring.field(), 0, t * m);
  for (std::size_t i = 0; i < t; ++i) {
    if (!(blocks[i].ring() == ring)) throw RingMismatch("blocks over different rings");
    for (std::size_t r = 0; r < blocks[i].dimension(); ++r) {
      Vec row(t * m, 0);
      for (std::size_t j = 0; j < m; ++j) row[j * t + i] = blocks[i].basis()(r, j);
      out.append_row(row);
    }
  }
  return out;
}

}  // namespace ccschur
