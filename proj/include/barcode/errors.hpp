#pragma once

#include <stdexcept>
#include <string>

namespace barcode {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (terms, term files, ordering specs).
/// Positions are 1-based; 0 means "not applicable".
struct ParseError : Error {
    ParseError(const std::string& msg, int line = 0, int column = 0)
        : Error(locate(msg, line, column)), line(line), column(column) {}

    int line;
    int column;

private:
    static std::string locate(const std::string& msg, int line, int column) {
        if (line <= 0) return msg;
        std::string s = "line " + std::to_string(line);
        if (column > 0) s += ", column " + std::to_string(column);
        return s + ": " + msg;
    }
};

/// The operation needs an admissible bar code (one whose decoding is an
/// order ideal) and the given one is not.
struct AdmissibilityError : Error {
    using Error::Error;
};

/// An exhaustive enumeration was refused because the variable count
/// exceeds the configured cap.
struct CapExceeded : Error {
    using Error::Error;
};

/// A structural invariant that the library relies on was found violated
/// at runtime. Always indicates a bug (or a mathematical counterexample
/// worth reporting), never bad user input.
struct InvariantViolation : Error {
    using Error::Error;
};

}  // namespace barcode
