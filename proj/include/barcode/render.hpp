#pragma once

#include <string>

#include "barcode/barcode.hpp"

namespace barcode {

/// Text diagram in the layout of the printed figures: column labels on
/// top, one row per rank (minimal variable first), bars as runs of '-',
/// a '*' in the gap after every starred bar. Output is a pure function
/// of the bar code, byte for byte.
std::string ascii_diagram(const BarCode& b);

/// The same geometry as SVG. Column width and row height are fixed
/// constants, so the output is deterministic too.
std::string svg_diagram(const BarCode& b);

}  // namespace barcode
