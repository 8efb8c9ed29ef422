#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ccschur/analysis.hpp"
#include "ccschur/quasitwisted.hpp"

namespace ccschur {

using ojson = nlohmann::ordered_json;

/// Constant-first coefficient list; the zero polynomial is [0].
ojson poly_json(const Poly& p);
ojson matrix_json(const MatrixFq& m);

/// Accepts a caret string or a coefficient list. Throws ParseError.
Poly poly_from_json(const ojson& v, const FieldSpec& field);

/// {"schema": 1, "q", "n", "a", "ell", "g", "k", ...}.
ojson report_json(const CodeReport& r);
/// Line-per-field rendering of report_json.
std::string report_text(const CodeReport& r);

ojson invariant_codes_json(const FieldSpec& field, std::size_t n, const std::vector<InvariantCode>& codes);

/// Input {"q", "n", "t", "a", "basis": [[...], ...]}. Throws ParseError.
QuasiTwistedCode quasi_twisted_from_json(const ojson& doc);
/// Decomposition plus a per-block analysis where the block is nonzero.
ojson quasi_twisted_report_json(const QuasiTwistedCode& Q, const AnalyzeOptions& options);

}  // namespace ccschur
