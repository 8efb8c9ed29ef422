// ccschur: command-line front end for the Schur-power toolkit.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ccschur/errors.hpp"
#include "ccschur/experiment.hpp"
#include "ccschur/serialize.hpp"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct AnalyzeArgs {
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::int64_t a = 1;
  std::string g;
  std::size_t max_power = ccschur::kDefaultMaxPower;
  std::string format = "json";
  std::uint64_t seed = 0;
};

struct ExperimentArgs {
  std::string config;
  std::string out = "experiment_out";
  unsigned threads = 0;
};

struct DivisorArgs {
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::int64_t a = 1;
  std::string rate;
  std::size_t max_count = 0;
  std::uint64_t seed = 0;
};

int run_analyze(const AnalyzeArgs& args) {
  const ccschur::FieldSpec field(args.q);
  const ccschur::RingSpec ring(field, args.n, args.a);
  ccschur::Poly g = [&] {
    try {
      return ccschur::parse_poly(args.g, field);
    } catch (const ccschur::ParseError& e) {
      throw CLI::ValidationError("--g", e.what());
    }
  }();
  const ccschur::ConstacyclicCode C(ring, g);
  const auto report = ccschur::analyze(C, ccschur::AnalyzeOptions{.max_power = args.max_power});
  if (args.format == "text") {
    std::cout << ccschur::report_text(report);
  } else {
    std::cout << ccschur::report_json(report).dump(2) << "\n";
  }
  return 0;
}

int run_experiment(const ExperimentArgs& args) {
  ccschur::ExperimentConfig cfg;
  try {
    cfg = ccschur::load_experiment_config(args.config);
  } catch (const ccschur::ParseError& e) {
    throw CLI::ValidationError("--config", e.what());
  }
  if (args.threads) cfg.threads = args.threads;
  const auto result = ccschur::run_experiment(cfg);
  for (const auto& s : result.skipped) std::cerr << "skipped " << s << "\n";
  const auto files = ccschur::emit_reports(result, cfg, args.out);
  for (const auto& f : files) std::cerr << "wrote " << f.string() << "\n";

  std::cout << "q,n,a,admissible,analyzed,exceeds_cap,max_stabilization_index,distinct_sequences\n";
  for (std::size_t i = 0; i < result.rings.size(); ++i) {
    const auto& r = result.rings[i];
    std::size_t max_index = 0;
    for (const auto& g : r.generators) max_index = std::max(max_index, g.dims.size());
    std::cout << r.q << ',' << r.n << ',' << r.a << ',' << r.admissible << ',' << r.generators.size() << ','
              << (r.exceeds_cap ? 1 : 0) << ',' << max_index << ',' << result.histogram.rings[i].entries.size()
              << "\n";
  }
  return 0;
}

int run_invariant_codes(std::uint32_t q, std::size_t n) {
  const ccschur::FieldSpec field(q);
  const auto codes = ccschur::enumerate_invariant_cyclic(field, n);
  std::cout << ccschur::invariant_codes_json(field, n, codes).dump(2) << "\n";
  return 0;
}

int run_divisors(const DivisorArgs& args) {
  const ccschur::FieldSpec field(args.q);
  const ccschur::RingSpec ring(field, args.n, args.a);
  ccschur::DivisorQuery query;
  if (!args.rate.empty() && args.rate != "none") {
    const auto slash = args.rate.find('/');
    try {
      query.rate_bound = slash == std::string::npos
                             ? ccschur::Rational{std::stoll(args.rate), 1}
                             : ccschur::Rational{std::stoll(args.rate.substr(0, slash)), std::stoll(args.rate.substr(slash + 1))};
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("--rate", "expected p/q");
    }
  }
  if (args.max_count) query.max_count = args.max_count;
  const auto divisors = ccschur::enumerate_divisors(ring, query, args.seed);
  ccschur::ojson doc;
  doc["schema"] = 1;
  doc["q"] = ring.q();
  doc["n"] = ring.n();
  doc["a"] = ring.a();
  ccschur::ojson factors = ccschur::ojson::array();
  for (const auto& f : ccschur::factor_modulus(ring, args.seed)) factors.push_back(ccschur::poly_json(f));
  doc["factors"] = factors;
  ccschur::ojson list = ccschur::ojson::array();
  for (const auto& d : divisors) {
    list.push_back(ccschur::ojson{{"g", ccschur::poly_json(d)}, {"k", args.n - static_cast<std::size_t>(d.degree())}});
  }
  doc["divisors"] = list;
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_quasitwisted(const std::string& input, std::size_t max_power) {
  std::stringstream buf;
  if (input == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot read " + input);
    buf << in.rdbuf();
  }
  ccschur::ojson doc;
  try {
    doc = ccschur::ojson::parse(buf.str());
  } catch (const ccschur::ojson::exception& e) {
    throw CLI::ValidationError("--input", e.what());
  }
  const auto Q = ccschur::quasi_twisted_from_json(doc);
  std::cout << ccschur::quasi_twisted_report_json(Q, ccschur::AnalyzeOptions{.max_power = max_power}).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur powers of constacyclic codes"};
  app.require_subcommand(1);

  AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "Full Schur-power analysis of one constacyclic code");
  analyze->add_option("--q", aa.q, "Field size (prime)")->required();
  analyze->add_option("--n", aa.n, "Code length")->required();
  analyze->add_option("--a", aa.a, "Constacyclic constant")->default_val(1);
  analyze->add_option("--g", aa.g, "Generator, e.g. \"x^3+2*x^2+4*x+3\" or \"[3,4,2,1]\"")->required();
  analyze->add_option("--max-power", aa.max_power, "Largest Schur power to try")->default_val(aa.max_power);
  analyze->add_option("--format", aa.format, "json or text")->check(CLI::IsMember({"json", "text"}))->default_val("json");
  analyze->add_option("--seed", aa.seed, "Factorization seed (unused by analysis)")->default_val(0);

  ExperimentArgs ea;
  auto* experiment = app.add_subcommand("experiment", "Dimension-sequence histograms over all generators of a ring");
  experiment->add_option("--config", ea.config, "Config file (key = value lines or JSON)")->required();
  experiment->add_option("--out", ea.out, "Output directory")->default_val(ea.out);
  experiment->add_option("--threads", ea.threads, "Worker threads (0 = automatic)")->default_val(0);

  std::uint32_t iq = 0;
  std::size_t in = 0;
  auto* invariant = app.add_subcommand("invariant-codes", "Cyclic codes with C^2 = C");
  invariant->add_option("--q", iq, "Field size (prime)")->required();
  invariant->add_option("--n", in, "Code length")->required();

  DivisorArgs da;
  auto* divisors = app.add_subcommand("divisors", "Factor x^n - a and list generator polynomials");
  divisors->add_option("--q", da.q, "Field size (prime)")->required();
  divisors->add_option("--n", da.n, "Code length")->required();
  divisors->add_option("--a", da.a, "Constacyclic constant")->default_val(1);
  divisors->add_option("--rate", da.rate, "Keep k/n below this bound, e.g. 1/2");
  divisors->add_option("--max-count", da.max_count, "Keep at most this many (0 = all)")->default_val(0);
  divisors->add_option("--seed", da.seed, "Factorization seed")->default_val(0);

  std::string qt_input;
  std::size_t qt_max_power = ccschur::kDefaultMaxPower;
  auto* qt = app.add_subcommand("quasitwisted", "Project a quasi-twisted code onto its constacyclic blocks");
  qt->add_option("--input", qt_input, "JSON file with q, n, t, a, basis ('-' for stdin)")->required();
  qt->add_option("--max-power", qt_max_power, "Largest Schur power to try")->default_val(qt_max_power);

  try {
    app.parse(argc, argv);
    if (*analyze) return run_analyze(aa);
    if (*experiment) return run_experiment(ea);
    if (*invariant) return run_invariant_codes(iq, in);
    if (*divisors) return run_divisors(da);
    if (*qt) return run_quasitwisted(qt_input, qt_max_power);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const ccschur::NotADivisor&) {
    std::cerr << "error: generator does not divide x^n - a\n";
    return kExitDomain;
  } catch (const ccschur::Unstabilized& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
