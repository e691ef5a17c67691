#include "barcode/term.hpp"

#include <algorithm>
#include <numeric>

namespace barcode {

namespace detail {

void check_same_vars(const Term& a, const Term& b, const char* what) {
    if (a.vars() != b.vars())
        throw Error(std::string(what) + ": variable count mismatch (" +
                    std::to_string(a.vars()) + " vs " + std::to_string(b.vars()) + ")");
}

}  // namespace detail

static std::string exps_to_string(const Exponents& e) {
    std::string s = "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + ")";
}

Term::Term(Exponents exps) : exps_(std::move(exps)) {
    for (int g : exps_)
        if (g < 0) throw Error("negative exponent in term " + exps_to_string(exps_));
}

Term Term::constant(int n) {
    if (n < 0) throw Error("negative variable count");
    return Term(Exponents(static_cast<size_t>(n), 0));
}

int Term::exponent(int var) const {
    if (var < 0 || var >= vars())
        throw Error("variable index " + std::to_string(var) + " out of range");
    return exps_[static_cast<size_t>(var)];
}

int Term::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0);
}

Term Term::times_var(int var, int k) const {
    if (var < 0 || var >= vars())
        throw Error("variable index " + std::to_string(var) + " out of range");
    if (k < 0) throw Error("negative power");
    Exponents e = exps_;
    e[static_cast<size_t>(var)] += k;
    return Term(std::move(e));
}

std::vector<int> Term::support() const {
    std::vector<int> out;
    for (int v = 0; v < vars(); ++v)
        if (exps_[static_cast<size_t>(v)] > 0) out.push_back(v);
    return out;
}

bool Term::is_constant() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int g) { return g == 0; });
}

VariableOrdering VariableOrdering::identity(int n) {
    if (n < 0) throw Error("negative variable count");
    std::vector<int> ranks(static_cast<size_t>(n));
    std::iota(ranks.begin(), ranks.end(), 0);
    return from_rank_list(std::move(ranks));
}

VariableOrdering VariableOrdering::from_rank_list(std::vector<int> rank_to_var) {
    const int n = static_cast<int>(rank_to_var.size());
    std::vector<int> inverse(static_cast<size_t>(n), -1);
    for (int r = 0; r < n; ++r) {
        int v = rank_to_var[static_cast<size_t>(r)];
        if (v < 0 || v >= n || inverse[static_cast<size_t>(v)] != -1)
            throw Error("ordering is not a permutation of the variables");
        inverse[static_cast<size_t>(v)] = r;
    }
    VariableOrdering ord;
    ord.rank_to_var_ = std::move(rank_to_var);
    ord.var_to_rank_ = std::move(inverse);
    return ord;
}

int VariableOrdering::var_at_rank(int rank) const {
    if (rank < 0 || rank >= vars())
        throw Error("rank " + std::to_string(rank) + " out of range");
    return rank_to_var_[static_cast<size_t>(rank)];
}

int VariableOrdering::rank_of(int var) const {
    if (var < 0 || var >= vars())
        throw Error("variable index " + std::to_string(var) + " out of range");
    return var_to_rank_[static_cast<size_t>(var)];
}

bool VariableOrdering::is_identity() const {
    for (int r = 0; r < vars(); ++r)
        if (rank_to_var_[static_cast<size_t>(r)] != r) return false;
    return true;
}

Cmp lex_compare(const Term& a, const Term& b, const VariableOrdering& ord) {
    detail::check_same_vars(a, b, "lex_compare");
    if (a.vars() != ord.vars())
        throw Error("lex_compare: ordering has wrong variable count");
    for (int r = ord.vars() - 1; r >= 0; --r) {
        const int v = ord.var_at_rank(r);
        const int da = a.exponent(v), db = b.exponent(v);
        if (da != db) return da < db ? Cmp::lt : Cmp::gt;
    }
    return Cmp::eq;
}

bool lex_less(const Term& a, const Term& b, const VariableOrdering& ord) {
    return lex_compare(a, b, ord) == Cmp::lt;
}

Term pi_projection(const Term& t, int rank, const VariableOrdering& ord) {
    if (t.vars() != ord.vars())
        throw Error("pi_projection: ordering has wrong variable count");
    if (rank < 0 || rank >= ord.vars())
        throw Error("pi_projection: rank " + std::to_string(rank) + " out of range");
    Exponents e = t.exponents();
    for (int r = 0; r < rank; ++r) e[static_cast<size_t>(ord.var_at_rank(r))] = 0;
    return Term(std::move(e));
}

bool divides(const Term& a, const Term& b) {
    detail::check_same_vars(a, b, "divides");
    for (int v = 0; v < a.vars(); ++v)
        if (a.exponent(v) > b.exponent(v)) return false;
    return true;
}

Term quotient(const Term& b, const Term& a) {
    detail::check_same_vars(a, b, "quotient");
    Exponents e(static_cast<size_t>(a.vars()));
    for (int v = 0; v < a.vars(); ++v) {
        int d = b.exponent(v) - a.exponent(v);
        if (d < 0) throw Error("quotient: divisor does not divide");
        e[static_cast<size_t>(v)] = d;
    }
    return Term(std::move(e));
}

Term relabel(const Term& t, const VariableOrdering& ord) {
    if (t.vars() != ord.vars())
        throw Error("relabel: ordering has wrong variable count");
    Exponents e(static_cast<size_t>(t.vars()));
    for (int r = 0; r < t.vars(); ++r)
        e[static_cast<size_t>(r)] = t.exponent(ord.var_at_rank(r));
    return Term(std::move(e));
}

TermSet::TermSet(int n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) {
    if (n < 0) throw Error("negative variable count");
    for (const Term& t : terms_) {
        if (t.vars() != n_)
            throw Error("term " + exps_to_string(t.exponents()) +
                        " does not have the ambient variable count " + std::to_string(n_));
        if (!index_.insert(t.exponents()).second)
            throw Error("duplicate term " + exps_to_string(t.exponents()) + " in term set");
    }
}

std::vector<Term> TermSet::sorted_by(const VariableOrdering& ord) const {
    std::vector<Term> out = terms_;
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
        return lex_less(a, b, ord);
    });
    return out;
}

std::set<int> degree_profile(const TermSet& M, int var) {
    return degree_profile(std::span<const Term>(M.terms()), var);
}

std::set<int> degree_profile(std::span<const Term> terms, int var) {
    std::set<int> out;
    for (const Term& t : terms) out.insert(t.exponent(var));
    return out;
}

}  // namespace barcode
