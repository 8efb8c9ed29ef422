#include "ccschur/linalg.hpp"

#include <algorithm>
#include <string>

#include "ccschur/errors.hpp"

namespace ccschur {

MatrixFq::MatrixFq(FieldSpec field, std::size_t cols, const std::vector<Vec>& rows)
    : field_(field), rows_(rows.size()), cols_(cols) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw DimensionMismatch("row of length " + std::to_string(r.size()) + " in a matrix with " +
                              std::to_string(cols) + " columns");
    }
    for (const auto v : r) data_.push_back(v % field.q());
  }
}

MatrixFq MatrixFq::identity(FieldSpec field, std::size_t size) {
  MatrixFq m(field, size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

std::vector<Vec> MatrixFq::row_vectors() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
  return out;
}

void MatrixFq::append_row(std::span<const Residue> v) {
  if (v.size() != cols_) throw DimensionMismatch("appended row has wrong length");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

MatrixFq MatrixFq::transposed() const {
  MatrixFq t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

MatrixFq MatrixFq::top_rows(std::size_t count) const {
  MatrixFq out(field_, count, cols_);
  std::copy_n(data_.begin(), count * cols_, out.data_.begin());
  return out;
}

namespace {

// row_dst -= factor * row_src, starting at column `from`
void axpy_row(const FieldSpec& f, std::span<Residue> dst, std::span<const Residue> src, Residue factor,
              std::size_t from) {
  const std::uint64_t q = f.q();
  const std::uint64_t neg = f.neg(factor);
  for (std::size_t c = from; c < dst.size(); ++c) {
    if (src[c] == 0) continue;
    dst[c] = static_cast<Residue>((dst[c] + neg * src[c]) % q);
  }
}

void scale_row(const FieldSpec& f, std::span<Residue> row, Residue s) {
  for (auto& v : row) v = f.mul(v, s);
}

}  // namespace

RrefResult rref(const MatrixFq& m) {
  RrefResult out{m, 0, {}};
  MatrixFq& a = out.reduced;
  const auto& f = a.field();
  std::size_t next = 0;
  for (std::size_t col = 0; col < a.cols() && next < a.rows(); ++col) {
    std::size_t pr = next;
    while (pr < a.rows() && a(pr, col) == 0) ++pr;
    if (pr == a.rows()) continue;
    if (pr != next) {
      auto r1 = a.row(pr);
      auto r2 = a.row(next);
      std::swap_ranges(r1.begin(), r1.end(), r2.begin());
    }
    scale_row(f, a.row(next), f.inv(a(next, col)));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == next || a(r, col) == 0) continue;
      axpy_row(f, a.row(r), a.row(next), a(r, col), col);
    }
    out.pivot_columns.push_back(col);
    ++next;
  }
  out.rank = next;
  return out;
}

MatrixFq row_basis(const MatrixFq& m) {
  const auto r = rref(m);
  return r.reduced.top_rows(r.rank);
}

std::size_t rank(const MatrixFq& m) { return rref(m).rank; }

bool in_row_space(const MatrixFq& m, std::span<const Residue> v) {
  if (v.size() != m.cols()) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " against " +
                            std::to_string(m.cols()) + " columns");
  }
  const auto r = rref(m);
  const auto& f = m.field();
  Vec w(v.begin(), v.end());
  for (auto& x : w) x %= f.q();
  for (std::size_t i = 0; i < r.rank; ++i) {
    const std::size_t pc = r.pivot_columns[i];
    if (w[pc] != 0) axpy_row(f, w, r.reduced.row(i), w[pc], 0);
  }
  return std::all_of(w.begin(), w.end(), [](Residue x) { return x == 0; });
}

bool row_spaces_equal(const MatrixFq& m1, const MatrixFq& m2) {
  if (m1.cols() != m2.cols()) throw DimensionMismatch("row spaces of different lengths");
  return row_basis(m1) == row_basis(m2);
}

MatrixFq nullspace(const MatrixFq& m) {
  const auto r = rref(m);
  const auto& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;
  MatrixFq out(f, 0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_columns[i]] = f.neg(r.reduced(i, free));
    out.append_row(v);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t EchelonBasis::reduce(Vec& v) const {
  const auto& f = field_;
  std::size_t lead = cols_;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    const long pr = c < pivot_row_.size() ? pivot_row_[c] : -1;
    if (pr < 0) {
      if (lead == cols_) lead = c;
      continue;
    }
    axpy_row(f, v, rows_[static_cast<std::size_t>(pr)], v[c], c);
  }
  return lead;
}

bool EchelonBasis::insert(std::span<const Residue> v) {
  if (v.size() != cols_) throw DimensionMismatch("vector length differs from basis width");
  if (full()) return false;
  Vec w(v.begin(), v.end());
  const std::size_t lead = reduce(w);
  if (lead == cols_) return false;
  scale_row(field_, w, field_.inv(w[lead]));
  if (pivot_row_.empty()) pivot_row_.assign(cols_, -1);
  pivot_row_[lead] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(w));
  pivots_.push_back(lead);
  return true;
}

bool EchelonBasis::contains(std::span<const Residue> v) const {
  if (v.size() != cols_) throw DimensionMismatch("vector length differs from basis width");
  Vec w(v.begin(), v.end());
  return reduce(w) == cols_;
}

MatrixFq EchelonBasis::to_rref() const { return row_basis(MatrixFq(field_, cols_, rows_)); }

}  // namespace ccschur
