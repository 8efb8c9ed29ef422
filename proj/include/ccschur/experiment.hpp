#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccschur/polyring.hpp"

namespace ccschur {

struct AMode {
  enum class Kind { cyclic, negacyclic, explicit_value };
  Kind kind = Kind::cyclic;
  std::int64_t value = 1;  // only for explicit_value

  Residue resolve(const FieldSpec& field) const;
  std::string to_string() const;
};

struct ExperimentConfig {
  std::vector<std::uint32_t> primes;
  std::size_t n = 0;
  std::vector<AMode> a_modes{AMode{}};
  std::optional<Rational> rate_bound = Rational{1, 2};
  std::size_t generator_cap = 1000;
  /// What happens to a ring with more than generator_cap generators:
  /// analyze all and flag it, keep the first generator_cap, or leave it out.
  enum class CapPolicy { flag, truncate, skip };
  CapPolicy cap_policy = CapPolicy::flag;
  std::size_t max_power = 8;
  std::uint64_t seed = 0;
  /// 0 means hardware concurrency, further capped by SCHUR_THREADS.
  unsigned threads = 0;
};

/// Reads `key = value` lines (value as JSON, bare words as strings, '#'
/// comments) or a single JSON object. Throws ParseError.
ExperimentConfig parse_experiment_config(std::string_view text);
/// Throws std::runtime_error if the file cannot be read, ParseError otherwise.
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

std::string to_string(ExperimentConfig::CapPolicy p);

struct GeneratorRecord {
  Poly g;
  std::size_t k = 0;
  /// Dimensions up to and including the first repeat (partial if unstabilized).
  std::vector<std::size_t> dims;
  bool stabilized = false;
  std::string label;
  std::size_t pattern_v = 0;
  Residue pattern_d = 0;
  bool invariant = false;
  std::uint64_t cycle_len = 0;
};

struct HistogramEntry {
  std::string label;
  std::uint64_t count = 0;
  std::uint64_t fraction_num = 0;
  std::uint64_t fraction_den = 1;

  friend bool operator==(const HistogramEntry&, const HistogramEntry&) = default;
};

struct RingHistogram {
  std::uint32_t q = 0;
  std::size_t n = 0;
  Residue a = 0;
  std::vector<HistogramEntry> entries;

  friend bool operator==(const RingHistogram&, const RingHistogram&) = default;
};

struct SequenceHistogram {
  std::vector<RingHistogram> rings;  // sorted by (q, a)

  friend bool operator==(const SequenceHistogram&, const SequenceHistogram&) = default;
};

struct RingResult {
  std::uint32_t q = 0;
  std::size_t n = 0;
  Residue a = 0;
  std::uint64_t ell = 0;
  /// Generators passing the rate filter, before any truncation.
  std::uint64_t admissible = 0;
  bool exceeds_cap = false;
  bool truncated = false;
  std::size_t label_length = 0;
  std::vector<GeneratorRecord> generators;  // canonical generator order
};

struct ExperimentResult {
  std::vector<RingResult> rings;
  SequenceHistogram histogram;
  std::vector<std::string> skipped;
};

/// Joins dims with '-', padding by repetition of the last value up to `length`.
std::string sequence_label(const std::vector<std::size_t>& dims, std::size_t length);

/// Number of worker threads for a requested count (0 = automatic), honoring
/// the SCHUR_THREADS environment variable as an upper bound.
unsigned worker_threads(unsigned requested);

ExperimentResult run_experiment(const ExperimentConfig& cfg);

std::string histogram_csv(const SequenceHistogram& h);
/// Inverse of histogram_csv. Throws ParseError.
SequenceHistogram parse_histogram_csv(std::string_view text);
std::string histogram_json(const ExperimentResult& result, const ExperimentConfig& cfg);
/// Gnuplot-style blocks, one per ring: index, quoted label, fraction.
std::string histogram_plot_data(const SequenceHistogram& h);
std::string generator_details_csv(const ExperimentResult& result);

/// Writes histogram.csv, histogram.json, histogram.dat and generators.csv into
/// `dir` (created if missing). Throws std::runtime_error naming the path.
std::vector<std::filesystem::path> emit_reports(const ExperimentResult& result, const ExperimentConfig& cfg,
                                                const std::filesystem::path& dir);

}  // namespace ccschur
