#include "barcode/barcode.hpp"

#include <algorithm>
#include <set>

#include "barcode/errors.hpp"
#include "barcode/text.hpp"

namespace barcode {

std::vector<std::pair<int, int>> StarMarking::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (size_t r = 0; r < starred.size(); ++r)
        for (size_t j = 0; j < starred[r].size(); ++j)
            if (starred[r][j]) out.emplace_back(static_cast<int>(r), static_cast<int>(j));
    return out;
}

BarCode BarCode::build(const TermSet& M, const VariableOrdering& ord) {
    if (M.empty()) throw Error("cannot build a bar code of an empty term set");
    if (M.vars() != ord.vars())
        throw Error("ordering variable count does not match the term set");

    BarCode b;
    b.n_ = M.vars();
    b.m_ = M.size();
    b.ord_ = ord;
    b.column_terms_ = M.sorted_by(ord);

    // Highest rank at which adjacent columns differ; columns are sorted
    // and distinct, so it exists for every adjacent pair.
    std::vector<int> split_rank(static_cast<size_t>(b.m_ > 0 ? b.m_ - 1 : 0), 0);
    for (int j = 0; j + 1 < b.m_; ++j) {
        int h = -1;
        for (int r = b.n_ - 1; r >= 0; --r) {
            const int v = ord.var_at_rank(r);
            if (b.column_terms_[static_cast<size_t>(j)].exponent(v) !=
                b.column_terms_[static_cast<size_t>(j + 1)].exponent(v)) {
                h = r;
                break;
            }
        }
        if (h < 0) throw InvariantViolation("equal adjacent columns in a sorted term set");
        split_rank[static_cast<size_t>(j)] = h;
    }

    b.rows_.assign(static_cast<size_t>(b.n_), {});
    for (int r = 0; r < b.n_; ++r) {
        const int v = ord.var_at_rank(r);
        auto& row = b.rows_[static_cast<size_t>(r)];
        int start = 0;
        for (int j = 0; j < b.m_; ++j) {
            const bool boundary = (j + 1 == b.m_) || split_rank[static_cast<size_t>(j)] >= r;
            if (boundary) {
                row.push_back(Bar{start, j + 1,
                                  b.column_terms_[static_cast<size_t>(start)].exponent(v)});
                start = j + 1;
            }
        }
    }

    b.validate();
    return b;
}

BarCode BarCode::from_spans(int n, int m,
                            std::vector<std::vector<std::pair<int, int>>> spans,
                            VariableOrdering ord) {
    if (ord.vars() == 0) ord = VariableOrdering::identity(n);

    BarCode b;
    b.n_ = n;
    b.m_ = m;
    b.ord_ = std::move(ord);
    b.rows_.assign(static_cast<size_t>(n), {});
    for (int r = 0; r < n; ++r) {
        auto& row = b.rows_[static_cast<size_t>(r)];
        for (auto [s, e] : spans[static_cast<size_t>(r)]) row.push_back(Bar{s, e, 0});
    }

    // Canonical degrees: position within the parent bar, from zero.
    // Nesting defects are left for validate() to report.
    auto parent_index = [&](int rank, int column) -> int {
        if (rank + 1 >= n) return 0;
        const auto& parents = b.rows_[static_cast<size_t>(rank + 1)];
        for (size_t p = 0; p < parents.size(); ++p)
            if (parents[p].contains(column)) return static_cast<int>(p);
        return -1;
    };
    for (int r = n - 1; r >= 0; --r) {
        auto& row = b.rows_[static_cast<size_t>(r)];
        int parent = -2, offset = 0;
        for (auto& bar : row) {
            int p = parent_index(r, bar.start);
            offset = (p == parent) ? offset + 1 : 0;
            parent = p;
            bar.degree = offset;
        }
    }

    b.validate();
    std::vector<Term> cols = decode(b);
    b.column_terms_ = std::move(cols);
    return b;
}

const std::vector<Bar>& BarCode::row(int rank) const {
    if (rank < 0 || rank >= n_) throw Error("row rank out of range");
    return rows_[static_cast<size_t>(rank)];
}

int BarCode::bar_index_at(int rank, int column) const {
    const auto& row = this->row(rank);
    auto it = std::upper_bound(row.begin(), row.end(), column,
                               [](int c, const Bar& bar) { return c < bar.end; });
    if (it == row.end() || !it->contains(column))
        throw Error("column " + std::to_string(column) + " outside the diagram");
    return static_cast<int>(it - row.begin());
}

void BarCode::validate() const {
    if (n_ < 1 || m_ < 1) throw InvariantViolation("bar code needs n >= 1 and m >= 1");
    if (static_cast<int>(rows_.size()) != n_)
        throw InvariantViolation("bar code must have one row per variable");

    for (int r = 0; r < n_; ++r) {
        const auto& row = rows_[static_cast<size_t>(r)];
        if (row.empty()) throw InvariantViolation("empty row in bar code");
        int expected = 0, sum = 0;
        for (const Bar& bar : row) {
            if (bar.start != expected || bar.length() < 1)
                throw InvariantViolation("row bars must tile the columns left to right");
            if (bar.degree < 0) throw InvariantViolation("negative bar degree");
            expected = bar.end;
            sum += bar.length();
        }
        // Def 3.1(b): every row spans all m columns.
        if (sum != m_ || expected != m_)
            throw InvariantViolation("row 1-lengths do not sum to the column count");
        if (r == 0)
            for (const Bar& bar : row)
                if (bar.length() != 1)
                    throw InvariantViolation("rank-0 bars must have unit length");
        if (r + 1 < n_) {
            const auto& parent_row = rows_[static_cast<size_t>(r + 1)];
            size_t p = 0;
            int prev_parent = -1, prev_degree = -1;
            for (const Bar& bar : row) {
                while (p < parent_row.size() && parent_row[p].end <= bar.start) ++p;
                if (p >= parent_row.size() || parent_row[p].start > bar.start ||
                    parent_row[p].end < bar.end)
                    throw InvariantViolation("bar does not lie over a single parent bar");
                if (static_cast<int>(p) == prev_parent && bar.degree <= prev_degree)
                    throw InvariantViolation(
                        "bar degrees must strictly increase within a parent bar");
                prev_parent = static_cast<int>(p);
                prev_degree = bar.degree;
            }
        } else {
            int prev_degree = -1;
            for (const Bar& bar : row) {
                if (bar.degree <= prev_degree)
                    throw InvariantViolation(
                        "top-row bar degrees must strictly increase");
                prev_degree = bar.degree;
            }
        }
    }
}

std::vector<Term> decode(const BarCode& b) {
    b.validate();
    const int n = b.vars();

    // Labels per bar, coarsest row first; a bar's label extends its
    // parent's by the bar's own degree in the row variable.
    std::vector<std::vector<Term>> labels(static_cast<size_t>(n));
    for (int r = n - 1; r >= 0; --r) {
        const auto& row = b.row(r);
        const int v = b.ordering().var_at_rank(r);
        auto& out = labels[static_cast<size_t>(r)];
        out.reserve(row.size());
        for (const Bar& bar : row) {
            Term base = (r + 1 < n)
                            ? labels[static_cast<size_t>(r + 1)]
                                    [static_cast<size_t>(b.bar_index_at(r + 1, bar.start))]
                            : Term::constant(n);
            out.push_back(base.times_var(v, bar.degree));
        }
    }

    std::vector<Term> columns;
    columns.reserve(static_cast<size_t>(b.columns()));
    for (const Term& t : labels[0]) columns.push_back(t);
    return columns;
}

EList elist(const BarCode& b, int column) {
    if (column < 0 || column >= b.columns()) throw Error("column index out of range");
    EList e;
    e.by_rank_desc.reserve(static_cast<size_t>(b.vars()));
    for (int r = b.vars() - 1; r >= 0; --r)
        e.by_rank_desc.push_back(b.row(r)[static_cast<size_t>(b.bar_index_at(r, column))].degree);
    return e;
}

bool is_admissible(const BarCode& b) {
    std::vector<Term> decoded = decode(b);
    std::set<Exponents> present;
    for (const Term& t : decoded) present.insert(t.exponents());
    for (const Term& t : decoded) {
        for (int v : t.support()) {
            Exponents e = t.exponents();
            --e[static_cast<size_t>(v)];
            if (!present.count(e)) return false;
        }
    }
    return true;
}

StarMarking star_marking(const BarCode& b) {
    const int n = b.vars();
    StarMarking marks;
    marks.starred.assign(static_cast<size_t>(n), {});
    for (int r = 0; r < n; ++r) {
        const auto& row = b.row(r);
        std::set<int> parent_ends;
        if (r + 1 < n)
            for (const Bar& bar : b.row(r + 1)) parent_ends.insert(bar.end);
        else
            parent_ends.insert(b.columns());
        auto& flags = marks.starred[static_cast<size_t>(r)];
        flags.reserve(row.size());
        for (const Bar& bar : row) flags.push_back(parent_ends.count(bar.end) != 0);
    }
    return marks;
}

TermSet star_set(const BarCode& b) {
    if (!is_admissible(b))
        throw AdmissibilityError("star set is defined for order ideals only");

    const StarMarking marks = star_marking(b);
    std::vector<Term> out;
    for (int r = 0; r < b.vars(); ++r) {
        const auto& row = b.row(r);
        const int v = b.ordering().var_at_rank(r);
        for (size_t j = 0; j < row.size(); ++j) {
            if (!marks.starred[static_cast<size_t>(r)][j]) continue;
            const Term& t = b.column_terms()[static_cast<size_t>(row[j].start)];
            out.push_back(pi_projection(t, r, b.ordering()).times_var(v));
        }
    }

    // Row-major reading is lex-ascending; sorting keeps that order and
    // surfaces duplicates, which cannot occur.
    std::vector<Term> sorted = out;
    std::sort(sorted.begin(), sorted.end(), [&](const Term& a, const Term& c) {
        return lex_less(a, c, b.ordering());
    });
    if (sorted != out)
        throw InvariantViolation("star set was not produced in lex order");
    return TermSet(b.vars(), std::move(sorted));
}

}  // namespace barcode
