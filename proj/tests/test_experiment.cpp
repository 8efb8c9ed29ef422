#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>

#include <json.hpp>

#include "ccschur/errors.hpp"
#include "ccschur/experiment.hpp"
#include "support/oracles.hpp"

using namespace ccschur;

namespace {

ExperimentConfig tiny(std::vector<std::uint32_t> primes, std::size_t n) {
  ExperimentConfig cfg;
  cfg.primes = std::move(primes);
  cfg.n = n;
  cfg.rate_bound.reset();
  cfg.threads = 2;
  return cfg;
}

}  // namespace

TEST_CASE("config parsing") {
  const auto cfg = parse_experiment_config(R"(
# two rings
primes = [5, 7]
n = 6
a_mode = ["cyclic", "negacyclic", 3]
rate_bound = "1/3"
generator_cap = 50
cap_policy = truncate
max_power = 6
seed = 9
)");
  CHECK(cfg.primes == std::vector<std::uint32_t>{5, 7});
  CHECK(cfg.n == 6);
  REQUIRE(cfg.a_modes.size() == 3);
  CHECK(cfg.a_modes[1].kind == AMode::Kind::negacyclic);
  CHECK(cfg.a_modes[2].resolve(FieldSpec(5)) == 3);
  CHECK(cfg.a_modes[1].resolve(FieldSpec(7)) == 6);
  REQUIRE(cfg.rate_bound.has_value());
  CHECK(cfg.rate_bound->num == 1);
  CHECK(cfg.rate_bound->den == 3);
  CHECK(cfg.generator_cap == 50);
  CHECK(cfg.cap_policy == ExperimentConfig::CapPolicy::truncate);
  CHECK(cfg.max_power == 6);
  CHECK(cfg.seed == 9);

  const auto js = parse_experiment_config(R"({"primes": [3], "n": 4, "rate_bound": null, "truncate": true})");
  CHECK(js.primes == std::vector<std::uint32_t>{3});
  CHECK_FALSE(js.rate_bound.has_value());
  CHECK(js.cap_policy == ExperimentConfig::CapPolicy::truncate);

  const auto defaults = parse_experiment_config("primes = [257]\nn = 50\n");
  CHECK(defaults.rate_bound->num == 1);
  CHECK(defaults.rate_bound->den == 2);
  CHECK(defaults.generator_cap == 1000);
  CHECK(defaults.cap_policy == ExperimentConfig::CapPolicy::flag);

  CHECK_THROWS_AS(parse_experiment_config("primes = [5\nn = 4\n"), ParseError);
  CHECK_THROWS_AS(parse_experiment_config("primes = [5]\nn = 4\ncolour = 3\n"), ParseError);
  CHECK_THROWS_AS(parse_experiment_config("primes = [5]\nn = -4\n"), ParseError);
  CHECK_THROWS_AS(parse_experiment_config("primes = [5]\nn = 4\na_mode = sideways\n"), ParseError);
  CHECK_THROWS_AS(parse_experiment_config("just words"), ParseError);
  CHECK_THROWS_AS(load_experiment_config("/nonexistent/config.toml"), std::runtime_error);
}

TEST_CASE("sequence labels") {
  CHECK(sequence_label({1, 1}, 4) == "1-1-1-1");
  CHECK(sequence_label({2, 3, 4, 4}, 4) == "2-3-4-4");
  CHECK(sequence_label({2, 3, 3}, 2) == "2-3-3");
}

TEST_CASE("thread count honors the environment cap") {
  CHECK(worker_threads(3) >= 1);
  CHECK(worker_threads(1) == 1);
}

TEST_CASE("a tiny experiment: every proper nonzero divisor of x^4 - 1 over F_5") {
  const auto result = run_experiment(tiny({5}, 4));
  REQUIRE(result.rings.size() == 1);
  const auto& ring = result.rings[0];
  CHECK(ring.admissible == 14);
  CHECK(ring.generators.size() == 14);
  CHECK_FALSE(ring.exceeds_cap);
  const std::map<std::string, std::uint64_t> want{{"1-1-1-1", 4}, {"2-2-2-2", 2}, {"2-3-4-4", 4}, {"3-4-4-4", 4}};
  std::map<std::string, std::uint64_t> got;
  for (const auto& e : result.histogram.rings[0].entries) got[e.label] = e.count;
  CHECK(got == want);

  // each record agrees with a direct analysis
  for (const auto& rec : ring.generators) {
    const ConstacyclicCode C(RingSpec(FieldSpec(5), 4, 1), rec.g);
    const auto h = hilbert_report(C);
    REQUIRE(rec.dims == h.dims);
    REQUIRE(rec.k == C.dimension());
    REQUIRE(rec.stabilized);
  }
}

TEST_CASE("histogram fractions are exact and sum to one") {
  const auto result = run_experiment(tiny({5, 7, 11}, 6));
  for (const auto& rh : result.histogram.rings) {
    std::uint64_t total = 0;
    for (const auto& e : rh.entries) total += e.count;
    // sum of count/total equals one; each fraction is reduced
    for (const auto& e : rh.entries) {
      REQUIRE(std::gcd(e.fraction_num, e.fraction_den) == 1);
      REQUIRE(e.fraction_num * total == e.count * e.fraction_den);
    }
  }
}

TEST_CASE("rings come out sorted and deduplicated") {
  auto cfg = tiny({7, 5, 5}, 4);
  cfg.a_modes = {AMode{AMode::Kind::negacyclic, -1}, AMode{AMode::Kind::cyclic, 1}, AMode{AMode::Kind::explicit_value, 1}};
  const auto result = run_experiment(cfg);
  REQUIRE(result.rings.size() == 4);
  CHECK(result.rings[0].q == 5);
  CHECK(result.rings[0].a == 1);
  CHECK(result.rings[1].a == 4);
  CHECK(result.rings[2].q == 7);
  CHECK(result.rings[3].a == 6);
}

TEST_CASE("empty and invalid prime lists") {
  const auto empty = run_experiment(tiny({}, 4));
  CHECK(empty.rings.empty());
  CHECK(empty.histogram.rings.empty());
  CHECK(histogram_csv(empty.histogram) == "q,n,a,sequence_label,count,fraction_num,fraction_den\n");

  const auto bad = run_experiment(tiny({4, 2}, 4));  // 4 is not prime, 2 divides n
  CHECK(bad.rings.empty());
  CHECK(bad.skipped.size() == 2);
}

TEST_CASE("the rate bound and cap policies") {
  auto cfg = tiny({5}, 4);
  cfg.rate_bound = Rational{1, 2};
  CHECK(run_experiment(cfg).rings[0].generators.size() == 4);

  cfg.rate_bound.reset();
  cfg.generator_cap = 5;
  const auto flagged = run_experiment(cfg);
  CHECK(flagged.rings[0].exceeds_cap);
  CHECK(flagged.rings[0].generators.size() == 14);

  cfg.cap_policy = ExperimentConfig::CapPolicy::truncate;
  const auto truncated = run_experiment(cfg);
  CHECK(truncated.rings[0].truncated);
  CHECK(truncated.rings[0].generators.size() == 5);

  cfg.cap_policy = ExperimentConfig::CapPolicy::skip;
  const auto skipped = run_experiment(cfg);
  CHECK(skipped.rings.empty());
  CHECK(skipped.skipped.size() == 1);
}

TEST_CASE("unstabilized sequences are marked") {
  auto cfg = tiny({5}, 4);
  cfg.max_power = 2;
  const auto result = run_experiment(cfg);
  bool marked = false;
  for (const auto& rec : result.rings[0].generators) {
    if (!rec.stabilized) {
      marked = true;
      CHECK(rec.label.back() == '+');
    }
  }
  CHECK(marked);
}

TEST_CASE("admissible counts match the orbit oracle") {
  for (const std::uint32_t q : {7u, 11u, 13u, 17u}) {
    auto cfg = tiny({q}, 10);
    cfg.rate_bound = Rational{1, 2};
    cfg.a_modes = {AMode{AMode::Kind::cyclic, 1}, AMode{AMode::Kind::negacyclic, -1}};
    const auto result = run_experiment(cfg);
    for (const auto& rr : result.rings) {
      REQUIRE(rr.admissible == oracle::divisors_below_rate(oracle::factor_degrees(q, 10, rr.ell), 10, 1, 2));
      REQUIRE(rr.generators.size() == rr.admissible);
    }
  }
}

TEST_CASE("CSV round trip and determinism") {
  auto cfg = tiny({5, 7, 13}, 6);
  cfg.a_modes = {AMode{AMode::Kind::cyclic, 1}, AMode{AMode::Kind::negacyclic, -1}};
  const auto first = run_experiment(cfg);
  const auto csv = histogram_csv(first.histogram);
  CHECK(parse_histogram_csv(csv) == first.histogram);
  CHECK_THROWS_AS(parse_histogram_csv("q,n\n1,2\n"), ParseError);

  cfg.threads = 1;
  const auto second = run_experiment(cfg);
  CHECK(histogram_csv(second.histogram) == csv);
  CHECK(histogram_json(second, cfg) == histogram_json(first, cfg));
  CHECK(generator_details_csv(second) == generator_details_csv(first));

  const auto doc = nlohmann::json::parse(histogram_json(first, cfg));
  CHECK(doc["rings"].size() == first.rings.size());
  CHECK(histogram_plot_data(first.histogram).find("1-") != std::string::npos);
}

TEST_CASE("report files are written") {
  const auto dir = std::filesystem::temp_directory_path() / "ccschur_test_reports";
  std::filesystem::remove_all(dir);
  const auto cfg = tiny({5}, 4);
  const auto written = emit_reports(run_experiment(cfg), cfg, dir);
  CHECK(written.size() == 4);
  for (const auto& p : written) CHECK(std::filesystem::file_size(p) > 0);
  std::filesystem::remove_all(dir);
}
