#include "ccschur/code.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ccschur/errors.hpp"

namespace ccschur {

ConstacyclicCode::ConstacyclicCode(RingSpec ring, const Poly& generator)
    : ring_(ring), g_(ring.field()), k_(0), basis_(ring.field(), 0, ring.n()) {
  if (!(generator.field() == ring_.field())) throw FieldMismatch("generator and ring over different fields");
  if (generator.is_zero()) throw ZeroGenerator("generator polynomial is zero");
  const std::size_t n = ring_.n();
  if (generator.degree() > static_cast<long>(n) || !divides(generator, ring_.modulus())) {
    throw NotADivisor("generator does not divide x^n - a");
  }
  g_ = generator.unit_constant();
  k_ = n - static_cast<std::size_t>(g_.degree());
  basis_ = row_basis(generator_matrix());
}

MatrixFq ConstacyclicCode::generator_matrix() const {
  const std::size_t n = ring_.n();
  MatrixFq m(ring_.field(), k_, n);
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j = 0; j <= static_cast<std::size_t>(g_.degree()); ++j) m(i, i + j) = g_.coeff(j);
  }
  return m;
}

ConstacyclicCode code_from_generator(const RingSpec& ring, const Poly& g) { return ConstacyclicCode(ring, g); }

Vec shift(std::span<const Residue> c, const RingSpec& ring, std::size_t i) {
  const std::size_t n = ring.n();
  if (c.size() != n) throw DimensionMismatch("codeword length differs from ring length");
  const auto& f = ring.field();
  Vec out(n, 0);
  const std::size_t wraps = i / n;
  const std::size_t rot = i % n;
  const Residue base = f.pow(ring.a(), static_cast<std::int64_t>(wraps % ring.ell()));
  const Residue wrapped = f.mul(base, ring.a());
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t t = j + rot;
    if (t < n) {
      out[t] = f.mul(c[j], base);
    } else {
      out[t - n] = f.mul(c[j], wrapped);
    }
  }
  return out;
}

bool is_constacyclic(const MatrixFq& basis, const RingSpec& ring) {
  if (basis.cols() != ring.n()) throw DimensionMismatch("basis width differs from ring length");
  const MatrixFq canon = row_basis(basis);
  EchelonBasis span(ring.field(), ring.n());
  for (std::size_t r = 0; r < canon.rows(); ++r) span.insert(canon.row(r));
  for (std::size_t r = 0; r < canon.rows(); ++r) {
    if (!span.contains(shift(canon.row(r), ring, 1))) return false;
  }
  return true;
}

Poly generator_from_basis(const MatrixFq& rows, const RingSpec& ring) {
  if (rows.cols() != ring.n()) throw DimensionMismatch("basis width differs from ring length");
  const auto red = rref(rows);
  const std::size_t k = red.rank;
  if (k == 0) throw ZeroCode("span has rank zero");
  const std::size_t n = ring.n();
  // The last row of G' is coeff(x^(k-1) g): its leading entry sits at k-1.
  if (red.pivot_columns[k - 1] != k - 1) {
    throw NotConstacyclic("standard form does not start with an identity block");
  }
  const auto last = red.reduced.row(k - 1);
  std::vector<Residue> coeffs(last.begin() + static_cast<std::ptrdiff_t>(k - 1), last.end());
  Poly g(ring.field(), std::move(coeffs));
  if (static_cast<std::size_t>(g.degree()) != n - k || !divides(g, ring.modulus())) {
    throw NotConstacyclic("recovered polynomial does not divide x^n - a");
  }
  const ConstacyclicCode regenerated(ring, g);
  if (!(regenerated.basis() == red.reduced.top_rows(k))) {
    throw NotConstacyclic("recovered generator spans a different code");
  }
  return regenerated.generator();
}

std::size_t weight(std::span<const Residue> v) noexcept {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Residue x) { return x != 0; }));
}

void for_each_codeword(const MatrixFq& rows, const std::function<bool(const Vec&)>& visit) {
  const auto& f = rows.field();
  const std::size_t k = rows.rows();
  const std::size_t n = rows.cols();
  if (k == 0) return;
  std::vector<Residue> digits(k, 0);
  Vec cur(n, 0);
  while (true) {
    // Increment the base-q counter; a digit wrapping q-1 -> 0 adds its row once more.
    std::size_t j = 0;
    for (; j < k; ++j) {
      const auto r = rows.row(j);
      for (std::size_t c = 0; c < n; ++c) cur[c] = f.add(cur[c], r[c]);
      if (++digits[j] < f.q()) break;
      digits[j] = 0;
    }
    if (j == k) return;  // wrapped back to zero
    if (!visit(cur)) return;
  }
}

std::optional<std::size_t> exact_min_weight(const MatrixFq& rows) {
  const MatrixFq b = row_basis(rows);
  if (b.rows() == 0) return std::nullopt;
  std::size_t best = b.cols();
  for_each_codeword(b, [&](const Vec& v) {
    best = std::min(best, weight(v));
    return best > 1;
  });
  return best;
}

std::uint64_t codeword_count(std::uint32_t q, std::size_t k) noexcept {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    total *= q;
  }
  return total;
}

MinDistance min_distance(const ConstacyclicCode& c, std::uint64_t budget) {
  const std::size_t k = c.dimension();
  const std::size_t n = c.n();
  if (k == 0) throw ZeroCode("minimum distance of the zero code is undefined");
  MinDistance out;
  if (codeword_count(c.ring().q(), k) > budget) {
    out.value = (n + k - 1) / k;
    out.method = DistanceMethod::lower_bound;
    return out;
  }
  const bool periodic = n % k == 0;
  const std::size_t period_weight = periodic ? n / k : 0;
  std::size_t best = n;
  for_each_codeword(c.basis(), [&](const Vec& v) {
    const std::size_t w = weight(v);
    best = std::min(best, w);
    if (periodic && w == period_weight && !out.periodic_support_start) {
      const auto first = static_cast<std::size_t>(std::find_if(v.begin(), v.end(), [](Residue x) { return x != 0; }) - v.begin());
      out.periodic_support_start = first;
      for (std::size_t j = 0; j < n; ++j) {
        const bool expected = j >= first && (j - first) % k == 0;
        if ((v[j] != 0) != expected) out.periodic_support_ok = false;
      }
    }
    return true;
  });
  out.value = best;
  out.method = DistanceMethod::exact;
  return out;
}

}  // namespace ccschur
