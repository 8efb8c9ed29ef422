#include "ccschur/serialize.hpp"

#include <sstream>

#include "ccschur/errors.hpp"

namespace ccschur {

ojson poly_json(const Poly& p) {
  ojson out = ojson::array();
  for (const auto c : p.coeffs()) out.push_back(c);
  if (out.empty()) out.push_back(0);
  return out;
}

ojson matrix_json(const MatrixFq& m) {
  ojson out = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (const auto x : m.row(r)) row.push_back(x);
    out.push_back(row);
  }
  return out;
}

Poly poly_from_json(const ojson& v, const FieldSpec& field) {
  if (v.is_string()) return parse_poly(v.get<std::string>(), field);
  if (!v.is_array()) throw ParseError("polynomial must be a string or coefficient list");
  std::vector<std::int64_t> coeffs;
  for (const auto& c : v) {
    if (!c.is_number_integer()) throw ParseError("polynomial coefficients must be integers");
    coeffs.push_back(c.get<std::int64_t>());
  }
  return Poly(field, coeffs);
}

namespace {

ojson sizes(const std::vector<std::size_t>& v) {
  ojson out = ojson::array();
  for (const auto x : v) out.push_back(x);
  return out;
}

std::string joined(const std::vector<std::size_t>& v) {
  std::string out;
  for (const auto x : v) out += (out.empty() ? "" : ", ") + std::to_string(x);
  return "[" + out + "]";
}

}  // namespace

ojson report_json(const CodeReport& r) {
  ojson doc;
  doc["schema"] = 1;
  doc["q"] = r.ring.q();
  doc["n"] = r.ring.n();
  doc["a"] = r.ring.a();
  doc["ell"] = r.ring.ell();
  doc["g"] = poly_json(r.g);
  doc["g_text"] = r.g.to_string();
  doc["k"] = r.k;
  doc["dims"] = sizes(r.hilbert.dims);
  doc["r"] = r.hilbert.r;
  doc["r_prime"] = r.hilbert.r_prime;
  doc["constacyclic_dims"] = sizes(r.hilbert.constacyclic_dims);
  ojson pattern;
  pattern["p"] = poly_json(r.pattern.p);
  pattern["v"] = r.pattern.v;
  pattern["d"] = r.pattern.d;
  pattern["c"] = r.pattern.c;
  doc["pattern"] = pattern;
  doc["invariant"] = r.invariant;
  doc["cycle_len"] = r.cycle_len;
  doc["equilibrium_generator"] = poly_json(r.equilibrium_generator);
  doc["equilibrium_min_distance"] = r.equilibrium_min_distance;
  ojson md;
  md["value"] = r.min_distance.value;
  md["method"] = r.min_distance.method == DistanceMethod::exact ? "exact" : "lower_bound";
  doc["min_distance"] = md;
  doc["power2_constacyclic"] = r.power2_constacyclic;
  doc["equilibrium_verified"] = r.equilibrium_verified;
  doc["invariant_by_spans"] = r.invariant_by_spans;
  return doc;
}

std::string report_text(const CodeReport& r) {
  std::ostringstream out;
  out << "ring         F_" << r.ring.q() << "[x]/(x^" << r.ring.n() << " - " << r.ring.a() << "), ell = " << r.ring.ell()
      << "\n";
  out << "generator    " << r.g.to_string() << "  (k = " << r.k << ")\n";
  out << "dims         " << joined(r.hilbert.dims) << "  r = " << r.hilbert.r << "\n";
  out << "consta dims  " << joined(r.hilbert.constacyclic_dims) << "  r' = " << r.hilbert.r_prime << "\n";
  out << "pattern      p = " << r.pattern.p.to_string() << ", v = " << r.pattern.v << ", d = " << r.pattern.d << "\n";
  out << "invariant    " << (r.invariant ? "yes" : "no") << "  cycle length " << r.cycle_len << "\n";
  out << "equilibrium  " << r.equilibrium_generator.to_string() << ", distance " << r.equilibrium_min_distance
      << (r.equilibrium_verified ? " (verified)" : " (NOT verified)") << "\n";
  out << "min distance " << r.min_distance.value
      << (r.min_distance.method == DistanceMethod::exact ? " (exact)" : " (lower bound)") << "\n";
  out << "C^2 constacyclic " << (r.power2_constacyclic ? "yes" : "no") << "\n";
  return out.str();
}

ojson invariant_codes_json(const FieldSpec& field, std::size_t n, const std::vector<InvariantCode>& codes) {
  ojson doc;
  doc["schema"] = 1;
  doc["q"] = field.q();
  doc["n"] = n;
  ojson list = ojson::array();
  for (const auto& c : codes) list.push_back(ojson{{"k", c.k}, {"generator", poly_json(c.generator)}});
  doc["codes"] = list;
  return doc;
}

QuasiTwistedCode quasi_twisted_from_json(const ojson& doc) {
  try {
    const FieldSpec field(doc.at("q").get<std::uint32_t>());
    const auto n = doc.at("n").get<std::size_t>();
    const auto t = doc.at("t").get<std::size_t>();
    const auto a = doc.at("a").get<std::int64_t>();
    MatrixFq rows(field, 0, n);
    for (const auto& row : doc.at("basis")) {
      Vec v;
      for (const auto& x : row) v.push_back(field.reduce(x.get<std::int64_t>()));
      if (v.size() != n) throw ParseError("basis row length differs from n");
      rows.append_row(v);
    }
    return QuasiTwistedCode(field, n, t, a, rows);
  } catch (const ojson::exception& e) {
    throw ParseError(std::string("quasi-twisted input: ") + e.what());
  }
}

ojson quasi_twisted_report_json(const QuasiTwistedCode& Q, const AnalyzeOptions& options) {
  ojson doc;
  doc["schema"] = 1;
  doc["q"] = Q.field().q();
  doc["n"] = Q.n();
  doc["t"] = Q.t();
  doc["m"] = Q.m();
  doc["a"] = Q.a();
  doc["dimension"] = Q.basis().rows();
  ojson blocks = ojson::array();
  const auto parts = decompose(Q);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    ojson b;
    b["index"] = i;
    b["dimension"] = parts[i].dimension();
    if (parts[i].dimension() == 0) {
      b["generator"] = nullptr;
    } else {
      const ConstacyclicCode C(Q.block_ring(), generator_from_basis(parts[i].basis(), Q.block_ring()));
      b["generator"] = poly_json(C.generator());
      b["report"] = report_json(analyze(C, options));
    }
    blocks.push_back(b);
  }
  doc["projections"] = blocks;
  return doc;
}

}  // namespace ccschur
