#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "ccschur/linalg.hpp"
#include "ccschur/polyring.hpp"

namespace ccschur {

/// Ideal of F_q[x]/(x^n - a) given by a generator g | x^n - a.
///
/// The generator is stored scaled so that g(0) = 1. The basis is the RREF of
/// the k x n shift matrix G whose i-th row is coeff(x^i g). The zero code
/// (g = x^n - a, k = 0) and the full code (g = 1) are both representable.
class ConstacyclicCode {
 public:
  /// Throws ZeroGenerator, FieldMismatch, or NotADivisor.
  ConstacyclicCode(RingSpec ring, const Poly& generator);

  const RingSpec& ring() const noexcept { return ring_; }
  const Poly& generator() const noexcept { return g_; }
  std::size_t n() const noexcept { return ring_.n(); }
  std::size_t dimension() const noexcept { return k_; }
  /// Canonical RREF basis (k rows).
  const MatrixFq& basis() const noexcept { return basis_; }
  /// The unreduced shift matrix G.
  MatrixFq generator_matrix() const;

 private:
  RingSpec ring_;
  Poly g_;
  std::size_t k_;
  MatrixFq basis_;
};

ConstacyclicCode code_from_generator(const RingSpec& ring, const Poly& g);

/// Constacyclic shift applied i times: coeff(x^i * poly(c) mod x^n - a).
Vec shift(std::span<const Residue> c, const RingSpec& ring, std::size_t i = 1);

/// True iff the row space of `basis` is closed under the shift.
bool is_constacyclic(const MatrixFq& basis, const RingSpec& ring);

/// Recovers the generator (g(0) = 1) of a constacyclic span from any
/// spanning set. Throws ZeroCode for rank 0 and NotConstacyclic when the
/// span is not an ideal of the ring.
Poly generator_from_basis(const MatrixFq& rows, const RingSpec& ring);

std::size_t weight(std::span<const Residue> v) noexcept;

/// Calls `visit` on every nonzero codeword of span(rows), rows independent.
/// Stops early if `visit` returns false.
void for_each_codeword(const MatrixFq& rows, const std::function<bool(const Vec&)>& visit);

/// Minimum weight of span(rows) by exhaustive enumeration; nullopt for the
/// zero span.
std::optional<std::size_t> exact_min_weight(const MatrixFq& rows);

enum class DistanceMethod { exact, lower_bound };

struct MinDistance {
  std::size_t value = 0;
  DistanceMethod method = DistanceMethod::exact;
  /// First nonzero position of a weight-n/k word, when one was found.
  std::optional<std::size_t> periodic_support_start;
  /// Whether that word's support is {p + z k : 0 <= z < n/k}.
  bool periodic_support_ok = true;
};

inline constexpr std::uint64_t kDefaultDistanceBudget = 1'000'000;

/// Exact when q^k <= budget, otherwise ceil(n/k) tagged lower_bound.
/// Throws ZeroCode for k = 0.
MinDistance min_distance(const ConstacyclicCode& c, std::uint64_t budget = kDefaultDistanceBudget);

/// q^k, saturating at UINT64_MAX.
std::uint64_t codeword_count(std::uint32_t q, std::size_t k) noexcept;

}  // namespace ccschur
