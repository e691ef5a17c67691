#include "barcode/janet.hpp"

#include <algorithm>
#include <map>

#include "barcode/errors.hpp"
#include "barcode/text.hpp"

namespace barcode {

int JanetDecomposition::index_of(const Term& t) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), t,
                               [&](const Term& a, const Term& b) { return lex_less(a, b, ord); });
    if (it == terms.end() || !(*it == t)) return -1;
    return static_cast<int>(it - terms.begin());
}

const std::vector<int>& JanetDecomposition::mult_of(const Term& t) const {
    int i = index_of(t);
    if (i < 0) throw Error("term " + to_string(t) + " is not in the decomposed set");
    return mult[static_cast<size_t>(i)];
}

const std::vector<int>& JanetDecomposition::nonmult_of(const Term& t) const {
    int i = index_of(t);
    if (i < 0) throw Error("term " + to_string(t) + " is not in the decomposed set");
    return nonmult[static_cast<size_t>(i)];
}

std::pair<std::vector<int>, std::vector<int>> mult_vars_definition(
    const Term& t, const TermSet& U, const VariableOrdering& ord) {
    if (!U.contains(t))
        throw Error("term " + to_string(t) + " is not an element of the set");

    const int n = U.vars();
    std::vector<int> mult, nonmult;
    for (int v = 0; v < n; ++v) {
        const int r = ord.rank_of(v);
        bool blocked = false;
        for (const Term& u : U.terms()) {
            if (u.exponent(v) <= t.exponent(v)) continue;
            bool agrees_above = true;
            for (int rr = r + 1; rr < n && agrees_above; ++rr) {
                const int w = ord.var_at_rank(rr);
                agrees_above = u.exponent(w) == t.exponent(w);
            }
            if (agrees_above) {
                blocked = true;
                break;
            }
        }
        (blocked ? nonmult : mult).push_back(v);
    }
    return {std::move(mult), std::move(nonmult)};
}

JanetDecomposition mult_vars_definition_all(const TermSet& U, const VariableOrdering& ord) {
    if (U.empty()) throw Error("cannot decompose an empty term set");
    JanetDecomposition dec;
    dec.ord = ord;
    dec.terms = U.sorted_by(ord);
    for (const Term& t : dec.terms) {
        auto [m, nm] = mult_vars_definition(t, U, ord);
        dec.mult.push_back(std::move(m));
        dec.nonmult.push_back(std::move(nm));
    }
    return dec;
}

JanetDecomposition mult_vars_barcode(const TermSet& U, const VariableOrdering& ord) {
    if (U.empty()) throw Error("cannot decompose an empty term set");
    const BarCode b = BarCode::build(U, ord);
    const StarMarking marks = star_marking(b);

    JanetDecomposition dec;
    dec.ord = ord;
    dec.terms = b.column_terms();
    const int n = b.vars();
    for (int col = 0; col < b.columns(); ++col) {
        std::vector<int> m, nm;
        for (int v = 0; v < n; ++v) {
            const int r = ord.rank_of(v);
            const int j = b.bar_index_at(r, col);
            (marks.contains(r, j) ? m : nm).push_back(v);
        }
        dec.mult.push_back(std::move(m));
        dec.nonmult.push_back(std::move(nm));
    }
    return dec;
}

bool cone_contains(const Term& w, const Term& t, const std::vector<int>& mult) {
    detail::check_same_vars(w, t, "cone_contains");
    if (!divides(t, w)) return false;
    for (int v : quotient(w, t).support())
        if (!std::binary_search(mult.begin(), mult.end(), v)) return false;
    return true;
}

std::optional<Term> involutive_divisor(const Term& w, const TermSet& U,
                                       const JanetDecomposition& dec) {
    std::optional<Term> found;
    for (size_t i = 0; i < dec.terms.size(); ++i) {
        if (!cone_contains(w, dec.terms[i], dec.mult[i])) continue;
        if (found)
            throw InvariantViolation("Janet cones of " + to_string(*found) + " and " +
                                     to_string(dec.terms[i]) + " both contain " + to_string(w));
        found = dec.terms[i];
    }
    (void)U;
    return found;
}

namespace {

CompletenessReport report_from_witnesses(std::vector<CompletenessWitness> witnesses) {
    CompletenessReport rep;
    rep.witnesses = std::move(witnesses);
    rep.complete = true;
    for (const auto& w : rep.witnesses) {
        if (!w.divisor) {
            rep.complete = false;
            rep.first_failure = {w.term, w.var};
            break;
        }
    }
    return rep;
}

}  // namespace

CompletenessReport is_complete_definition(const TermSet& U, const VariableOrdering& ord) {
    if (U.empty()) throw Error("completeness is undefined for the empty set");
    const JanetDecomposition dec = mult_vars_definition_all(U, ord);

    std::vector<CompletenessWitness> witnesses;
    for (size_t i = 0; i < dec.terms.size(); ++i) {
        const Term& t = dec.terms[i];
        std::vector<int> nm = dec.nonmult[i];
        std::sort(nm.begin(), nm.end(),
                  [&](int a, int b) { return ord.rank_of(a) < ord.rank_of(b); });
        for (int v : nm)
            witnesses.push_back({t, v, involutive_divisor(t.times_var(v), U, dec)});
    }
    return report_from_witnesses(std::move(witnesses));
}

CompletenessReport is_complete_barcode(const TermSet& U, const VariableOrdering& ord) {
    if (U.empty()) throw Error("completeness is undefined for the empty set");
    const BarCode b = BarCode::build(U, ord);
    const StarMarking marks = star_marking(b);
    const int n = b.vars();

    // starred(rank of v, bar under column) == v multiplicative for the column term
    auto starred_for = [&](int col, int v) {
        const int r = ord.rank_of(v);
        return marks.contains(r, b.bar_index_at(r, col));
    };

    std::vector<CompletenessWitness> witnesses;
    for (int col = 0; col < b.columns(); ++col) {
        const Term& t = b.column_terms()[static_cast<size_t>(col)];
        for (int r = 0; r < n; ++r) {
            const int j = b.bar_index_at(r, col);
            if (marks.contains(r, j)) continue;  // multiplicative, nothing to do
            const int v = ord.var_at_rank(r);
            // An unstarred bar is never the last of its row.
            if (j + 1 >= static_cast<int>(b.row(r).size()))
                throw InvariantViolation("unstarred bar at the end of a row");
            const Bar& next = b.row(r)[static_cast<size_t>(j + 1)];
            const Term shifted = t.times_var(v);

            std::optional<Term> found;
            for (int c2 = next.start; c2 < next.end; ++c2) {
                const Term& s = b.column_terms()[static_cast<size_t>(c2)];
                if (!divides(s, shifted)) continue;
                bool ok = true;
                for (int q : quotient(shifted, s).support())
                    if (!starred_for(c2, q)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                if (found)
                    throw InvariantViolation("two involutive divisors of " + to_string(shifted) +
                                             " over the same bar");
                found = s;
            }
            witnesses.push_back({t, v, std::move(found)});
        }
    }

    // Sort obligations of each term by rank (columns are already lex sorted;
    // the row loop above visits ranks ascending, so this is already true).
    return report_from_witnesses(std::move(witnesses));
}

namespace {

// Recursive completeness in rank coordinates: position r of each vector
// is the exponent of the rank-r variable, and the last position belongs
// to the maximal variable.
std::vector<bool> rank_mult_vars(const Exponents& t, const std::vector<Exponents>& set) {
    const size_t n = t.size();
    std::vector<bool> mult(n, true);
    for (const Exponents& u : set) {
        for (size_t r = 0; r < n; ++r) {
            if (u[r] <= t[r]) continue;
            bool agrees_above = std::equal(u.begin() + static_cast<long>(r) + 1, u.end(),
                                           t.begin() + static_cast<long>(r) + 1);
            if (agrees_above) mult[r] = false;
        }
    }
    return mult;
}

bool rank_cone_contains(const Exponents& w, const Exponents& t,
                        const std::vector<bool>& mult) {
    for (size_t r = 0; r < w.size(); ++r) {
        if (t[r] > w[r]) return false;
        if (w[r] > t[r] && !mult[r]) return false;
    }
    return true;
}

bool complete_rec(const std::vector<Exponents>& terms) {
    if (terms.size() <= 1) return true;  // singleton sets are complete
    const size_t n = terms[0].size();
    if (n == 0) return true;

    // Slice by the top-rank degree, dropping that coordinate.
    std::map<int, std::vector<Exponents>> slices;
    for (const Exponents& t : terms) {
        Exponents head(t.begin(), t.end() - 1);
        slices[t[n - 1]].push_back(std::move(head));
    }
    const int alpha = slices.rbegin()->first;

    for (const auto& [lambda, slice] : slices)
        if (!complete_rec(slice)) return false;

    for (const auto& [lambda, slice] : slices) {
        if (lambda >= alpha) continue;
        auto next_it = slices.find(lambda + 1);
        if (next_it == slices.end()) return false;
        const std::vector<Exponents>& next = next_it->second;
        for (const Exponents& t : slice) {
            bool covered = false;
            for (const Exponents& s : next) {
                if (rank_cone_contains(t, s, rank_mult_vars(s, next))) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
    }
    return true;
}

}  // namespace

bool is_complete_recursive(const TermSet& U, const VariableOrdering& ord) {
    if (U.empty()) throw Error("completeness is undefined for the empty set");
    std::vector<Exponents> ranked;
    ranked.reserve(static_cast<size_t>(U.size()));
    for (const Term& t : U.terms()) ranked.push_back(relabel(t, ord).exponents());
    return complete_rec(ranked);
}

}  // namespace barcode
