#pragma once

#include <json.hpp>

#include "barcode/barcode.hpp"
#include "barcode/janet.hpp"
#include "barcode/search.hpp"
#include "barcode/term.hpp"

namespace barcode {

/// JSON shapes (variables are 1-based in JSON, matching the x1..xn
/// display names):
///   term set:   {"vars": n, "terms": [[e1,...,en], ...]}
///   ordering:   {"rank_to_var": [v_min, ..., v_max]}
///   report:     {"complete": b, "witnesses": [...], "first_failure": ...}
/// emit/parse round-trip exactly for term sets, orderings and reports.

nlohmann::json to_json(const TermSet& M);
nlohmann::json to_json(const VariableOrdering& ord);
nlohmann::json to_json(const CompletenessReport& rep);
nlohmann::json to_json(const JanetDecomposition& dec);
nlohmann::json to_json(const BarCode& b);
nlohmann::json to_json(const SearchResult& res);

TermSet term_set_from_json(const nlohmann::json& j);
VariableOrdering ordering_from_json(const nlohmann::json& j);
CompletenessReport report_from_json(const nlohmann::json& j, int vars);

}  // namespace barcode
