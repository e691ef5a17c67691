#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "barcode/term.hpp"

namespace barcode {

/// Product syntax: factors `x<k>` or `x<k>^<e>` joined by `*`; the bare
/// literal `1` is the constant term. Variables are 1-based in text.
///   x1^4*x2*x3   ->  (4,1,1)
Term parse_term(std::string_view text, int vars);

/// One term per line; `#` starts a comment; blank lines are skipped.
/// A line is either product syntax, the literal `1`, or a whitespace
/// separated exponent vector ("4 1 1"). When `vars` is absent, the
/// ambient count is inferred from the largest variable index / longest
/// vector seen; exponent vectors shorter than the final count are padded
/// with zeros on the right.
TermSet parse_term_set(std::string_view text, std::optional<int> vars = std::nullopt);

/// `identity` or a chain `x1<x2<x4<x3` listing the variables from the
/// minimal to the maximal one. Must mention each of x1..xn exactly once.
VariableOrdering parse_ordering(std::string_view text, int vars);

std::string to_string(const Term& t);
std::string to_string(const VariableOrdering& ord);
std::string to_string(Cmp c);

/// Default display name of a 0-based variable: "x1", "x2", ...
std::string var_name(int var);

}  // namespace barcode
