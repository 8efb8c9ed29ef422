#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ccschur/code.hpp"
#include "ccschur/schur.hpp"

namespace ccschur {

/// Dimension (Hilbert) sequence of a code under Schur powers.
struct HilbertReport {
  /// dim C^<1>, dim C^<2>, ... up to and including the first repeated value.
  std::vector<std::size_t> dims;
  /// Regularity: smallest i >= 1 with dim C^<i> = dim C^<i+1>.
  std::size_t r = 0;
  std::uint64_t ell = 1;
  /// dim C^<z ell + 1> for z = 0 .. r_prime + 1.
  std::vector<std::size_t> constacyclic_dims;
  /// Unique z with z ell + 1 >= r > (z - 1) ell + 1.
  std::uint64_t r_prime = 0;

  /// Number of powers computed, i.e. r + 1.
  std::size_t stabilization_index() const noexcept { return dims.size(); }
  std::size_t stable_dimension() const noexcept { return dims.back(); }
};

inline constexpr std::size_t kDefaultMaxPower = 16;

/// Computes powers C, C^<2>, ... until two consecutive dimensions agree.
/// Throws InvalidArgument for max_power < 2 and Unstabilized (with the
/// partial sequence) if no repeat occurs by C^<max_power>.
HilbertReport hilbert_report(const ConstacyclicCode& C, std::size_t max_power = kDefaultMaxPower);

/// C^<1>, ..., C^<count> by iterated products.
std::vector<SpanCode> schur_powers(const ConstacyclicCode& C, std::size_t count);

/// ceil((r - 1) / ell) for r >= 1.
std::uint64_t constacyclic_regularity(std::size_t r, std::uint64_t ell);

/// Pattern polynomial data: g = sum_{i<v} c_i x^i p with
/// p = sum_{j < n/v} d^j x^(vj), d^(-n/v) = a. For v = n, p = 1 and d = a^-1.
struct PatternInfo {
  Poly p;
  std::size_t v = 0;
  Residue d = 0;
  std::vector<Residue> c;
};

/// Scans candidate periods taken from the support of g (plus n) in increasing
/// order and returns the first that reconstructs g. Throws ZeroCode for k = 0.
PatternInfo pattern_polynomial(const ConstacyclicCode& C);

/// p^<z ell + 1>. Throws BelowRegularity if z < r_prime.
Poly equilibrium_generator(const ConstacyclicCode& C, std::uint64_t z, const PatternInfo& pattern,
                           std::uint64_t r_prime);
/// Convenience overload computing the pattern and the Hilbert report.
Poly equilibrium_generator(const ConstacyclicCode& C, std::uint64_t z);

/// n / v: minimum distance of every C^<z ell + 1>, z >= r_prime.
std::size_t equilibrium_min_distance(const ConstacyclicCode& C, const PatternInfo& pattern);
std::size_t equilibrium_min_distance(const ConstacyclicCode& C);

/// d^ell = 1.
bool is_invariant_at_equilibrium(const ConstacyclicCode& C, const PatternInfo& pattern);
bool is_invariant_at_equilibrium(const ConstacyclicCode& C);

/// Period of C^<z ell + 1> for z >= r_prime: the multiplicative order of d^ell.
std::uint64_t equilibrium_cycle_length(const ConstacyclicCode& C, const PatternInfo& pattern);
std::uint64_t equilibrium_cycle_length(const ConstacyclicCode& C);

/// The five equivalent conditions for a code of dimension k with k | n.
struct DisjointSupportBattery {
  bool applicable = false;
  bool generator_form = false;          // g = u sum d^i x^(ki), d^(-n/k) = a
  bool shift_matrix_is_standard = false;  // G = u G'
  bool shift_basis_disjoint = false;    // coeff(x^i g), i < k, disjoint
  bool disjoint_basis_exists = false;
  bool has_weight_n_over_k = false;

  bool all_equal() const noexcept {
    return generator_form == shift_matrix_is_standard && generator_form == shift_basis_disjoint &&
           generator_form == disjoint_basis_exists && generator_form == has_weight_n_over_k;
  }
};

DisjointSupportBattery disjoint_support_battery(const ConstacyclicCode& C,
                                                std::uint64_t budget = kDefaultDistanceBudget);

struct InvariantCode {
  std::size_t k;
  Poly generator;  // sum_{i < n/k} x^(ki)
};

/// The cyclic codes with C^<2> = C, one per divisor k of n. Throws NotCoprime.
std::vector<InvariantCode> enumerate_invariant_cyclic(const FieldSpec& field, std::size_t n);

struct AnalyzeOptions {
  std::size_t max_power = kDefaultMaxPower;
  std::uint64_t distance_budget = kDefaultDistanceBudget;
};

/// Everything known about one code, as reported by the CLI.
struct CodeReport {
  RingSpec ring;
  Poly g;
  std::size_t k;
  HilbertReport hilbert;
  PatternInfo pattern;
  bool invariant;
  std::uint64_t cycle_len;
  Poly equilibrium_generator;  // at z = r_prime
  std::size_t equilibrium_min_distance;
  MinDistance min_distance;
  bool power2_constacyclic;
  /// generator_from_basis(C^<r' ell + 1>) equals the equilibrium generator.
  bool equilibrium_verified;
  /// C^<r' ell + 1> = C^<(r' + 1) ell + 1> by direct span comparison.
  bool invariant_by_spans;
};

/// Throws ZeroCode for the zero code.
CodeReport analyze(const ConstacyclicCode& C, const AnalyzeOptions& options = {});

}  // namespace ccschur
