#pragma once

#include <utility>
#include <vector>

#include "barcode/term.hpp"

namespace barcode {

/// One bar: a half-open span of columns within a row, together with the
/// degree of the row's variable on those columns. The i-length of a
/// coarser bar is derived by counting, never stored.
struct Bar {
    int start = 0;
    int end = 0;
    int degree = 0;

    int length() const { return end - start; }
    bool contains(int column) const { return start <= column && column < end; }

    friend bool operator==(const Bar&, const Bar&) = default;
};

/// Star markers attached to a bar code: starred(r, j) says the j-th bar
/// of the rank-r row is followed by a star. The last bar of every row is
/// starred; an inner bar is starred exactly when the next bar of its row
/// lies over a different parent bar.
struct StarMarking {
    std::vector<std::vector<bool>> starred;  // starred[rank][bar]

    bool contains(int rank, int bar) const {
        return starred[static_cast<size_t>(rank)][static_cast<size_t>(bar)];
    }

    /// All starred (rank, bar) positions, row by row.
    std::vector<std::pair<int, int>> pairs() const;

    friend bool operator==(const StarMarking&, const StarMarking&) = default;
};

/// Per-column tuple of bar degrees, maximal rank first. Equals the
/// rank-ordered exponents of the term decoded for that column.
struct EList {
    std::vector<int> by_rank_desc;

    friend bool operator==(const EList&, const EList&) = default;
};

/// The layered bar diagram of a finite term set under a variable
/// ordering. Row r (0-based rank, 0 = minimal variable) groups the
/// lex-sorted columns by equality of the suffix projection pi^r; the
/// rank-0 row therefore has one unit bar per column and the rank-(n-1)
/// row is the coarsest. Rows are rendered top (rank 0) to bottom.
class BarCode {
public:
    /// Build the diagram of M under ord. M must be non-empty.
    static BarCode build(const TermSet& M, const VariableOrdering& ord);

    /// Assemble a bar code from bare spans (no degrees), assigning each
    /// bar the canonical degree: its position among the bars of the same
    /// row inside its parent bar, counted from zero. Column terms are
    /// recovered by decoding. Throws InvariantViolation on malformed
    /// geometry.
    static BarCode from_spans(int n, int m,
                              std::vector<std::vector<std::pair<int, int>>> spans,
                              VariableOrdering ord = {});

    int vars() const { return n_; }
    int columns() const { return m_; }
    const VariableOrdering& ordering() const { return ord_; }

    /// The lex-sorted terms labelling the unit bars of the rank-0 row.
    const std::vector<Term>& column_terms() const { return column_terms_; }

    const std::vector<Bar>& row(int rank) const;
    const std::vector<std::vector<Bar>>& rows() const { return rows_; }

    /// Index of the rank-r bar covering the given column.
    int bar_index_at(int rank, int column) const;

    /// Check the structural invariants (rows partition the columns, bars
    /// nest, rank-0 bars are unit, degrees grow within a parent).
    /// Throws InvariantViolation when violated.
    void validate() const;

private:
    int n_ = 0;
    int m_ = 0;
    VariableOrdering ord_;
    std::vector<Term> column_terms_;
    std::vector<std::vector<Bar>> rows_;
};

/// Reconstruct the column labels from the diagram alone: the coarsest
/// row's bars are labelled by powers of the maximal variable, and each
/// finer bar multiplies its parent's label by a power of its own row
/// variable. Returns one term per column, in column order; for a built
/// bar code this reproduces column_terms().
std::vector<Term> decode(const BarCode& b);

/// The e-list of a column (0-based).
EList elist(const BarCode& b, int column);

/// True when the decoded set is an order ideal: every column's e-list
/// with any positive entry decremented must appear as another column's
/// e-list.
bool is_admissible(const BarCode& b);

StarMarking star_marking(const BarCode& b);

/// The star set of an admissible bar code: for every starred bar of row
/// r with a term t over it, the term x_r * pi^r(t). Returned in lex
/// order under the bar code's ordering, which is also the row-major
/// reading order of the diagram. Throws AdmissibilityError when the
/// decoded set is not an order ideal.
TermSet star_set(const BarCode& b);

}  // namespace barcode
