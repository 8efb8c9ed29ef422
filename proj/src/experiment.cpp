#include "ccschur/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ccschur/analysis.hpp"
#include "ccschur/errors.hpp"

namespace ccschur {

using json = nlohmann::ordered_json;

Residue AMode::resolve(const FieldSpec& field) const {
  switch (kind) {
    case Kind::cyclic:
      return 1;
    case Kind::negacyclic:
      return field.neg(1);
    case Kind::explicit_value:
      return field.reduce(value);
  }
  return 1;
}

std::string AMode::to_string() const {
  switch (kind) {
    case Kind::cyclic:
      return "cyclic";
    case Kind::negacyclic:
      return "negacyclic";
    case Kind::explicit_value:
      return std::to_string(value);
  }
  return "";
}

std::string to_string(ExperimentConfig::CapPolicy p) {
  switch (p) {
    case ExperimentConfig::CapPolicy::flag:
      return "flag";
    case ExperimentConfig::CapPolicy::truncate:
      return "truncate";
    case ExperimentConfig::CapPolicy::skip:
      return "skip";
  }
  return "";
}

// ---------------------------------------------------------------------------
// config

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

AMode parse_a_mode(const json& v) {
  if (v.is_number_integer()) return AMode{AMode::Kind::explicit_value, v.get<std::int64_t>()};
  if (!v.is_string()) throw ParseError("a_mode entries must be strings or integers");
  const auto s = v.get<std::string>();
  if (s == "cyclic") return AMode{AMode::Kind::cyclic, 1};
  if (s == "negacyclic") return AMode{AMode::Kind::negacyclic, -1};
  try {
    std::size_t used = 0;
    const auto a = std::stoll(s, &used);
    if (used == s.size()) return AMode{AMode::Kind::explicit_value, a};
  } catch (const std::exception&) {
  }
  throw ParseError("unknown a_mode '" + s + "'");
}

std::optional<Rational> parse_rate(const json& v) {
  if (v.is_null()) return std::nullopt;
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "none") return std::nullopt;
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational{std::stoll(s), 1};
      return Rational{std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
    } catch (const std::exception&) {
      throw ParseError("bad rate_bound '" + s + "'");
    }
  }
  if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer()) {
    return Rational{v[0].get<std::int64_t>(), v[1].get<std::int64_t>()};
  }
  if (v.is_number_integer()) return Rational{v.get<std::int64_t>(), 1};
  throw ParseError("rate_bound must be \"p/q\", [p, q], an integer or \"none\"");
}

template <typename T>
T get_unsigned(const json& v, const char* key) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ParseError(std::string(key) + " must be a non-negative integer");
  }
  return static_cast<T>(v.get<std::uint64_t>());
}

ExperimentConfig config_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("config must be an object");
  ExperimentConfig cfg;
  bool have_n = false;
  for (const auto& [key, v] : doc.items()) {
    if (key == "primes") {
      if (v.is_number_integer()) {
        cfg.primes = {get_unsigned<std::uint32_t>(v, "primes")};
      } else if (v.is_array()) {
        cfg.primes.clear();
        for (const auto& p : v) cfg.primes.push_back(get_unsigned<std::uint32_t>(p, "primes"));
      } else {
        throw ParseError("primes must be an integer list");
      }
    } else if (key == "n") {
      cfg.n = get_unsigned<std::size_t>(v, "n");
      have_n = true;
    } else if (key == "a_mode" || key == "a_modes") {
      cfg.a_modes.clear();
      if (v.is_array()) {
        for (const auto& m : v) cfg.a_modes.push_back(parse_a_mode(m));
      } else {
        cfg.a_modes.push_back(parse_a_mode(v));
      }
    } else if (key == "rate_bound") {
      cfg.rate_bound = parse_rate(v);
    } else if (key == "generator_cap") {
      cfg.generator_cap = get_unsigned<std::size_t>(v, "generator_cap");
    } else if (key == "truncate") {
      if (!v.is_boolean()) throw ParseError("truncate must be true or false");
      cfg.cap_policy = v.get<bool>() ? ExperimentConfig::CapPolicy::truncate : ExperimentConfig::CapPolicy::flag;
    } else if (key == "cap_policy") {
      const auto p = v.is_string() ? v.get<std::string>() : std::string();
      if (p == "flag") {
        cfg.cap_policy = ExperimentConfig::CapPolicy::flag;
      } else if (p == "truncate") {
        cfg.cap_policy = ExperimentConfig::CapPolicy::truncate;
      } else if (p == "skip") {
        cfg.cap_policy = ExperimentConfig::CapPolicy::skip;
      } else {
        throw ParseError("cap_policy must be flag, truncate or skip");
      }
    } else if (key == "max_power") {
      cfg.max_power = get_unsigned<std::size_t>(v, "max_power");
    } else if (key == "seed") {
      cfg.seed = get_unsigned<std::uint64_t>(v, "seed");
    } else if (key == "threads") {
      cfg.threads = get_unsigned<unsigned>(v, "threads");
    } else {
      throw ParseError("unknown config key '" + key + "'");
    }
  }
  if (!have_n || cfg.n == 0) throw ParseError("config needs a positive n");
  if (cfg.max_power < 2) throw ParseError("max_power must be at least 2");
  if (cfg.rate_bound && cfg.rate_bound->den <= 0) throw ParseError("rate_bound denominator must be positive");
  return cfg;
}

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view text) {
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    try {
      return config_from_json(json::parse(body));
    } catch (const json::exception& e) {
      throw ParseError(std::string("config: ") + e.what());
    }
  }
  json doc = json::object();
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string raw = trim(std::string_view(t).substr(eq + 1));
    if (key.empty() || raw.empty()) throw ParseError("config line " + std::to_string(lineno) + ": empty key or value");
    json value = json::parse(raw, nullptr, false);
    if (value.is_discarded()) value = raw;
    doc[key] = std::move(value);
  }
  return config_from_json(doc);
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_experiment_config(buf.str());
}

// ---------------------------------------------------------------------------
// running

std::string sequence_label(const std::vector<std::size_t>& dims, std::size_t length) {
  std::string out;
  const std::size_t total = std::max(length, dims.size());
  for (std::size_t i = 0; i < total; ++i) {
    if (i) out += '-';
    out += std::to_string(i < dims.size() ? dims[i] : dims.back());
  }
  return out;
}

unsigned worker_threads(unsigned requested) {
  unsigned count = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SCHUR_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && cap > 0) count = std::min<unsigned>(count, static_cast<unsigned>(cap));
  }
  return std::max(1u, count);
}

namespace {

GeneratorRecord analyze_generator(const RingSpec& ring, const Poly& g, std::size_t max_power) {
  const ConstacyclicCode C(ring, g);
  GeneratorRecord rec{.g = C.generator(), .k = C.dimension()};
  try {
    const auto h = hilbert_report(C, max_power);
    rec.dims = h.dims;
    rec.stabilized = true;
  } catch (const Unstabilized& e) {
    rec.dims = e.partial_dims();
  }
  const auto pattern = pattern_polynomial(C);
  rec.pattern_v = pattern.v;
  rec.pattern_d = pattern.d;
  rec.invariant = is_invariant_at_equilibrium(C, pattern);
  rec.cycle_len = equilibrium_cycle_length(C, pattern);
  return rec;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      (void)t;
      for (std::size_t i; !failed && (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

RingHistogram histogram_for(const RingResult& ring) {
  RingHistogram out{.q = ring.q, .n = ring.n, .a = ring.a};
  std::map<std::vector<std::size_t>, std::pair<std::string, std::uint64_t>> buckets;
  for (const auto& rec : ring.generators) {
    std::vector<std::size_t> key = rec.dims;
    key.resize(std::max(key.size(), ring.label_length), rec.dims.back());
    auto& slot = buckets[key];
    slot.first = rec.label;
    ++slot.second;
  }
  const std::uint64_t total = ring.generators.size();
  for (const auto& [key, slot] : buckets) {
    const std::uint64_t g = std::gcd(slot.second, total);
    out.entries.push_back(HistogramEntry{slot.first, slot.second, slot.second / g, total / g});
  }
  return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  ExperimentResult result;
  const unsigned threads = worker_threads(cfg.threads);

  std::vector<RingSpec> rings;
  for (const auto q : cfg.primes) {
    for (const auto& mode : cfg.a_modes) {
      try {
        const FieldSpec f(q);
        RingSpec ring(f, cfg.n, mode.resolve(f));
        ring.require_coprime();
        rings.push_back(ring);
      } catch (const Error& e) {
        result.skipped.push_back("q=" + std::to_string(q) + " n=" + std::to_string(cfg.n) + " a=" + mode.to_string() +
                                 ": " + e.what());
      }
    }
  }
  std::sort(rings.begin(), rings.end(), [](const RingSpec& x, const RingSpec& y) {
    return std::pair(x.q(), x.a()) < std::pair(y.q(), y.a());
  });
  rings.erase(std::unique(rings.begin(), rings.end()), rings.end());

  for (const auto& ring : rings) {
    const std::string where =
        "q=" + std::to_string(ring.q()) + " n=" + std::to_string(ring.n()) + " a=" + std::to_string(ring.a());
    std::vector<Poly> gens;
    try {
      const auto factors = factor_modulus(ring, cfg.seed);
      // The full code generated by 1 is not counted, matching the exclusion of
      // the zero code at the other end.
      std::uint64_t admissible = count_divisors(factors, ring.n(), cfg.rate_bound);
      if (!cfg.rate_bound || cfg.rate_bound->num > cfg.rate_bound->den) --admissible;
      if (admissible > cfg.generator_cap && cfg.cap_policy == ExperimentConfig::CapPolicy::skip) {
        result.skipped.push_back(where + ": " + std::to_string(admissible) + " generators exceed the cap of " +
                                 std::to_string(cfg.generator_cap));
        continue;
      }
      gens = enumerate_divisors(ring, DivisorQuery{.max_count = std::nullopt, .rate_bound = cfg.rate_bound}, cfg.seed);
    } catch (const Error& e) {
      result.skipped.push_back(where + ": " + e.what());
      continue;
    }
    std::erase_if(gens, [](const Poly& g) { return g.degree() == 0; });

    RingResult rr{.q = ring.q(), .n = ring.n(), .a = ring.a(), .ell = ring.ell(), .admissible = gens.size()};
    rr.exceeds_cap = gens.size() > cfg.generator_cap;
    if (rr.exceeds_cap && cfg.cap_policy == ExperimentConfig::CapPolicy::truncate) {
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(cfg.generator_cap), gens.end());
      rr.truncated = true;
    }

    std::vector<std::optional<GeneratorRecord>> slots(gens.size());
    parallel_for(gens.size(), threads, [&](std::size_t i) { slots[i] = analyze_generator(ring, gens[i], cfg.max_power); });
    for (auto& s : slots) {
      rr.label_length = std::max(rr.label_length, s->dims.size());
      rr.generators.push_back(std::move(*s));
    }
    for (auto& rec : rr.generators) rec.label = sequence_label(rec.dims, rr.label_length) + (rec.stabilized ? "" : "+");
    result.histogram.rings.push_back(histogram_for(rr));
    result.rings.push_back(std::move(rr));
  }
  return result;
}

// ---------------------------------------------------------------------------
// output

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (const char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << body;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

std::string histogram_csv(const SequenceHistogram& h) {
  std::string out = "q,n,a,sequence_label,count,fraction_num,fraction_den\n";
  for (const auto& ring : h.rings) {
    for (const auto& e : ring.entries) {
      out += std::to_string(ring.q) + ',' + std::to_string(ring.n) + ',' + std::to_string(ring.a) + ',' + e.label +
             ',' + std::to_string(e.count) + ',' + std::to_string(e.fraction_num) + ',' +
             std::to_string(e.fraction_den) + '\n';
    }
  }
  return out;
}

SequenceHistogram parse_histogram_csv(std::string_view text) {
  SequenceHistogram h;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "q,n,a,sequence_label,count,fraction_num,fraction_den") {
    throw ParseError("histogram CSV header missing");
  }
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 7) throw ParseError("histogram CSV line " + std::to_string(lineno) + ": expected 7 fields");
    try {
      const auto q = static_cast<std::uint32_t>(std::stoul(f[0]));
      const auto n = static_cast<std::size_t>(std::stoull(f[1]));
      const auto a = static_cast<Residue>(std::stoul(f[2]));
      if (h.rings.empty() || h.rings.back().q != q || h.rings.back().n != n || h.rings.back().a != a) {
        h.rings.push_back(RingHistogram{.q = q, .n = n, .a = a});
      }
      h.rings.back().entries.push_back(HistogramEntry{f[3], std::stoull(f[4]), std::stoull(f[5]), std::stoull(f[6])});
    } catch (const std::logic_error&) {
      throw ParseError("histogram CSV line " + std::to_string(lineno) + ": bad number");
    }
  }
  return h;
}

std::string histogram_json(const ExperimentResult& result, const ExperimentConfig& cfg) {
  json doc;
  doc["schema"] = 1;
  json meta;
  meta["n"] = cfg.n;
  meta["primes"] = cfg.primes;
  json modes = json::array();
  for (const auto& m : cfg.a_modes) modes.push_back(m.to_string());
  meta["a_modes"] = modes;
  meta["rate_bound"] = cfg.rate_bound ? json(std::to_string(cfg.rate_bound->num) + "/" + std::to_string(cfg.rate_bound->den))
                                      : json(nullptr);
  meta["generator_cap"] = cfg.generator_cap;
  meta["cap_policy"] = to_string(cfg.cap_policy);
  meta["max_power"] = cfg.max_power;
  meta["seed"] = cfg.seed;
  meta["generator_order"] = "canonical: by degree, then coefficients constant-first; zero and full codes excluded";
  meta["label_padding"] = "repeat stabilized dimension to the ring's longest sequence; '+' marks unstabilized";
  meta["skipped"] = result.skipped;
  doc["metadata"] = meta;

  json rings = json::array();
  for (std::size_t i = 0; i < result.rings.size(); ++i) {
    const auto& rr = result.rings[i];
    const auto& hr = result.histogram.rings[i];
    json r;
    r["q"] = rr.q;
    r["n"] = rr.n;
    r["a"] = rr.a;
    r["ell"] = rr.ell;
    r["admissible_generators"] = rr.admissible;
    r["analyzed_generators"] = rr.generators.size();
    r["exceeds_cap"] = rr.exceeds_cap;
    r["truncated"] = rr.truncated;
    r["label_length"] = rr.label_length;
    json entries = json::array();
    for (const auto& e : hr.entries) {
      entries.push_back(json{{"sequence_label", e.label},
                             {"count", e.count},
                             {"fraction_num", e.fraction_num},
                             {"fraction_den", e.fraction_den}});
    }
    r["histogram"] = entries;
    rings.push_back(r);
  }
  doc["rings"] = rings;
  return doc.dump(2) + "\n";
}

std::string histogram_plot_data(const SequenceHistogram& h) {
  std::ostringstream out;
  for (std::size_t r = 0; r < h.rings.size(); ++r) {
    const auto& ring = h.rings[r];
    if (r) out << "\n\n";
    out << "# q=" << ring.q << " n=" << ring.n << " a=" << ring.a << "\n";
    out << "# index label fraction\n";
    for (std::size_t i = 0; i < ring.entries.size(); ++i) {
      const auto& e = ring.entries[i];
      char frac[32];
      std::snprintf(frac, sizeof frac, "%.10f",
                    static_cast<double>(e.fraction_num) / static_cast<double>(e.fraction_den));
      out << i << " \"" << e.label << "\" " << frac << "\n";
    }
  }
  return out.str();
}

std::string generator_details_csv(const ExperimentResult& result) {
  std::string out = "q,n,a,generator,k,stabilization_index,stabilized,sequence_label,pattern_v,pattern_d,invariant,cycle_len\n";
  for (const auto& rr : result.rings) {
    for (const auto& rec : rr.generators) {
      std::string g;
      for (const auto c : rec.g.coeffs()) g += (g.empty() ? "" : " ") + std::to_string(c);
      out += std::to_string(rr.q) + ',' + std::to_string(rr.n) + ',' + std::to_string(rr.a) + ",[" + g + "]," +
             std::to_string(rec.k) + ',' + std::to_string(rec.dims.size()) + ',' + (rec.stabilized ? "1" : "0") + ',' +
             rec.label + ',' + std::to_string(rec.pattern_v) + ',' + std::to_string(rec.pattern_d) + ',' +
             (rec.invariant ? "1" : "0") + ',' + std::to_string(rec.cycle_len) + '\n';
    }
  }
  return out;
}

std::vector<std::filesystem::path> emit_reports(const ExperimentResult& result, const ExperimentConfig& cfg,
                                                const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  const std::vector<std::pair<std::filesystem::path, std::string>> files{
      {dir / "histogram.csv", histogram_csv(result.histogram)},
      {dir / "histogram.json", histogram_json(result, cfg)},
      {dir / "histogram.dat", histogram_plot_data(result.histogram)},
      {dir / "generators.csv", generator_details_csv(result)},
  };
  std::vector<std::filesystem::path> written;
  for (const auto& [path, body] : files) {
    write_file(path, body);
    written.push_back(path);
  }
  return written;
}

}  // namespace ccschur
