#include "ccschur/analysis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "ccschur/errors.hpp"

namespace ccschur {

std::vector<SpanCode> schur_powers(const ConstacyclicCode& C, std::size_t count) {
  std::vector<SpanCode> powers;
  if (count == 0) return powers;
  const SpanCode base(C);
  powers.push_back(base);
  while (powers.size() < count) powers.push_back(code_product(powers.back(), base));
  return powers;
}

std::uint64_t constacyclic_regularity(std::size_t r, std::uint64_t ell) {
  if (r == 0) return 0;
  return (static_cast<std::uint64_t>(r) - 1 + ell - 1) / ell;
}

HilbertReport hilbert_report(const ConstacyclicCode& C, std::size_t max_power) {
  if (max_power < 2) throw InvalidArgument("max_power must be at least 2");
  HilbertReport rep;
  rep.ell = C.ring().ell();
  const SpanCode base(C);
  SpanCode current = base;
  rep.dims.push_back(current.dimension());
  for (std::size_t i = 2; i <= max_power; ++i) {
    current = code_product(current, base);
    rep.dims.push_back(current.dimension());
    if (rep.dims[i - 1] == rep.dims[i - 2]) {
      rep.r = i - 1;
      break;
    }
  }
  if (rep.r == 0) {
    throw Unstabilized("dimension sequence still growing at power " + std::to_string(max_power), rep.dims);
  }
  rep.r_prime = constacyclic_regularity(rep.r, rep.ell);
  // Past r every power has the stable dimension.
  for (std::uint64_t z = 0; z <= rep.r_prime + 1; ++z) {
    const std::uint64_t e = z * rep.ell + 1;
    rep.constacyclic_dims.push_back(e <= rep.r ? rep.dims[e - 1] : rep.stable_dimension());
  }
  return rep;
}

PatternInfo pattern_polynomial(const ConstacyclicCode& C) {
  const auto& ring = C.ring();
  const auto& f = ring.field();
  const std::size_t n = ring.n();
  if (C.dimension() == 0) throw ZeroCode("the zero code has no pattern polynomial");
  const Poly& g = C.generator();
  const Vec b = g.embed(n);

  std::set<std::size_t> candidates{n};
  for (std::size_t j = 1; j < n; ++j) {
    if (b[j] != 0) candidates.insert(j);
  }
  for (const std::size_t v : candidates) {
    if (v == n) break;
    if (n % v != 0) continue;
    const Residue d = b[v];
    const auto periods = static_cast<std::int64_t>(n / v);
    if (f.pow(d, -periods) != ring.a()) continue;
    std::vector<Residue> pc(n - v + 1, 0);
    Residue dj = 1;
    for (std::size_t j = 0; j < n / v; ++j, dj = f.mul(dj, d)) pc[v * j] = dj;
    Poly p(f, std::move(pc));
    std::vector<Residue> c(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(v));
    if (Poly(f, c) * p == g) return PatternInfo{std::move(p), v, d, std::move(c)};
  }
  return PatternInfo{Poly::constant(f, 1), n, f.inv(ring.a()), b};
}

Poly equilibrium_generator(const ConstacyclicCode& C, std::uint64_t z, const PatternInfo& pattern,
                           std::uint64_t r_prime) {
  if (z < r_prime) {
    throw BelowRegularity("z = " + std::to_string(z) + " is below the constacyclic regularity " +
                          std::to_string(r_prime));
  }
  const auto& ring = C.ring();
  return poly_schur_power(pattern.p, ring, z * ring.ell() + 1).unit_constant();
}

Poly equilibrium_generator(const ConstacyclicCode& C, std::uint64_t z) {
  return equilibrium_generator(C, z, pattern_polynomial(C), hilbert_report(C).r_prime);
}

std::size_t equilibrium_min_distance(const ConstacyclicCode& C, const PatternInfo& pattern) {
  return C.n() / pattern.v;
}

std::size_t equilibrium_min_distance(const ConstacyclicCode& C) {
  return equilibrium_min_distance(C, pattern_polynomial(C));
}

bool is_invariant_at_equilibrium(const ConstacyclicCode& C, const PatternInfo& pattern) {
  const auto& ring = C.ring();
  return ring.field().pow(pattern.d, static_cast<std::int64_t>(ring.ell())) == 1;
}

bool is_invariant_at_equilibrium(const ConstacyclicCode& C) {
  return is_invariant_at_equilibrium(C, pattern_polynomial(C));
}

std::uint64_t equilibrium_cycle_length(const ConstacyclicCode& C, const PatternInfo& pattern) {
  const auto& ring = C.ring();
  const auto& f = ring.field();
  return multiplicative_order(f, f.pow(pattern.d, static_cast<std::int64_t>(ring.ell())));
}

std::uint64_t equilibrium_cycle_length(const ConstacyclicCode& C) {
  return equilibrium_cycle_length(C, pattern_polynomial(C));
}

// ---------------------------------------------------------------------------

namespace {

bool pairwise_disjoint(const std::vector<Vec>& rows) {
  if (rows.empty()) return true;
  std::vector<bool> used(rows.front().size(), false);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c] == 0) continue;
      if (used[c]) return false;
      used[c] = true;
    }
  }
  return true;
}

/// Nonzero codewords of C supported inside {p + z k}, for each offset p < k.
std::vector<Vec> periodic_support_words(const ConstacyclicCode& C) {
  const std::size_t n = C.n();
  const std::size_t k = C.dimension();
  const auto& f = C.ring().field();
  const MatrixFq& B = C.basis();
  std::vector<Vec> out;
  for (std::size_t p = 0; p < k; ++p) {
    // Coefficient vectors m with (m B)_j = 0 for every j off the periodic support.
    MatrixFq constraints(f, 0, k);
    for (std::size_t j = 0; j < n; ++j) {
      if (j >= p && (j - p) % k == 0) continue;
      Vec col(k);
      for (std::size_t i = 0; i < k; ++i) col[i] = B(i, j);
      constraints.append_row(col);
    }
    const MatrixFq sol = nullspace(constraints);
    for (std::size_t s = 0; s < sol.rows(); ++s) {
      Vec word(n, 0);
      for (std::size_t i = 0; i < k; ++i) {
        const Residue m = sol(s, i);
        if (m == 0) continue;
        for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(m, B(i, j)));
      }
      out.push_back(std::move(word));
    }
  }
  return out;
}

std::vector<Vec> words_of_weight(const ConstacyclicCode& C, std::size_t target, std::uint64_t budget) {
  std::vector<Vec> out;
  if (codeword_count(C.ring().q(), C.dimension()) <= budget) {
    for_each_codeword(C.basis(), [&](const Vec& v) {
      if (weight(v) == target) out.push_back(v);
      return true;
    });
  } else {
    for (auto& w : periodic_support_words(C)) {
      if (weight(w) == target) out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace

DisjointSupportBattery disjoint_support_battery(const ConstacyclicCode& C, std::uint64_t budget) {
  DisjointSupportBattery out;
  const std::size_t n = C.n();
  const std::size_t k = C.dimension();
  if (k == 0 || n % k != 0) return out;
  out.applicable = true;
  const auto& ring = C.ring();
  const auto& f = ring.field();
  const Poly& g = C.generator();
  const std::size_t periods = n / k;

  // (1)
  {
    const Residue d = k == n ? f.inv(ring.a()) : g.coeff(k);
    bool ok = d != 0 && f.pow(d, -static_cast<std::int64_t>(periods)) == ring.a();
    Residue expected = 1;
    for (std::size_t j = 0; j < n && ok; ++j) {
      if (j % k == 0) {
        ok = g.coeff(j) == expected;
        expected = f.mul(expected, d);
      } else {
        ok = g.coeff(j) == 0;
      }
    }
    out.generator_form = ok;
  }

  // (2)
  const MatrixFq G = C.generator_matrix();
  {
    const MatrixFq& Gp = C.basis();
    const Residue u = f.div(G(0, 0), Gp(0, 0));
    bool ok = true;
    for (std::size_t r = 0; r < k && ok; ++r)
      for (std::size_t c = 0; c < n && ok; ++c) ok = G(r, c) == f.mul(u, Gp(r, c));
    out.shift_matrix_is_standard = ok;
  }

  // (3)
  out.shift_basis_disjoint = pairwise_disjoint(G.row_vectors());

  // (4) and (5)
  const auto candidates = words_of_weight(C, periods, budget);
  out.has_weight_n_over_k = !candidates.empty();
  bool basis_found = out.shift_basis_disjoint;
  for (const auto& w : candidates) {
    if (basis_found) break;
    std::vector<Vec> shifts;
    for (std::size_t i = 0; i < k; ++i) shifts.push_back(shift(w, ring, i));
    basis_found = pairwise_disjoint(shifts) && rank(MatrixFq(f, n, shifts)) == k;
  }
  out.disjoint_basis_exists = basis_found;
  return out;
}

std::vector<InvariantCode> enumerate_invariant_cyclic(const FieldSpec& field, std::size_t n) {
  const RingSpec ring = RingSpec::cyclic(field, n);
  ring.require_coprime();
  std::vector<InvariantCode> out;
  for (std::size_t k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    std::vector<Residue> coeffs(n - k + 1, 0);
    for (std::size_t i = 0; i < n / k; ++i) coeffs[k * i] = 1;
    const ConstacyclicCode C(ring, Poly(field, std::move(coeffs)));
    const SpanCode span(C);
    if (!(code_product(span, span) == span)) {
      throw std::logic_error("m(" + std::to_string(k) + ") does not generate a Schur-invariant code");
    }
    out.push_back(InvariantCode{k, C.generator()});
  }
  return out;
}

CodeReport analyze(const ConstacyclicCode& C, const AnalyzeOptions& options) {
  if (C.dimension() == 0) throw ZeroCode("cannot analyze the zero code");
  const auto& ring = C.ring();
  auto hilbert = hilbert_report(C, options.max_power);
  auto pattern = pattern_polynomial(C);
  const std::uint64_t ell = ring.ell();
  const std::uint64_t rp = hilbert.r_prime;
  Poly eq = equilibrium_generator(C, rp, pattern, rp);

  const SpanCode at_equilibrium = code_power(C, rp * ell + 1);
  const SpanCode one_step_later = code_power(C, (rp + 1) * ell + 1);
  bool verified = false;
  try {
    verified = generator_from_basis(at_equilibrium.basis(), ring) == eq;
  } catch (const NotConstacyclic&) {
    verified = false;
  }

  return CodeReport{
      .ring = ring,
      .g = C.generator(),
      .k = C.dimension(),
      .hilbert = std::move(hilbert),
      .pattern = pattern,
      .invariant = is_invariant_at_equilibrium(C, pattern),
      .cycle_len = equilibrium_cycle_length(C, pattern),
      .equilibrium_generator = std::move(eq),
      .equilibrium_min_distance = equilibrium_min_distance(C, pattern),
      .min_distance = min_distance(C, options.distance_budget),
      .power2_constacyclic = is_constacyclic(code_power(C, 2).basis(), ring),
      .equilibrium_verified = verified,
      .invariant_by_spans = at_equilibrium == one_step_later,
  };
}

}  // namespace ccschur
