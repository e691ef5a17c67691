#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "barcode/errors.hpp"

namespace barcode {

/// Exponent vector of a term, indexed by 0-based variable index.
using Exponents = std::vector<int>;

/// A monomial term x_1^{g_1} ... x_n^{g_n}, stored densely as its
/// exponent vector. Variables are 0-based in the API; textual I/O uses
/// the 1-based names x1..xn.
class Term {
public:
    Term() = default;
    explicit Term(Exponents exps);

    /// The constant term 1 in n variables.
    static Term constant(int n);

    int vars() const { return static_cast<int>(exps_.size()); }
    int exponent(int var) const;
    const Exponents& exponents() const { return exps_; }

    /// Total degree (sum of exponents).
    int degree() const;

    /// This term multiplied by x_var^k.
    Term times_var(int var, int k = 1) const;

    /// 0-based indices of variables with positive exponent, ascending.
    std::vector<int> support() const;

    bool is_constant() const;

    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term& a, const Term& b) {
        return a.exps_ <=> b.exps_;
    }

private:
    Exponents exps_;
};

/// A permutation of the variables fixing which variable is minimal and
/// which maximal. rank 0 is the minimal variable, rank n-1 the maximal.
/// The identity ordering realises x1 < x2 < ... < xn.
class VariableOrdering {
public:
    VariableOrdering() = default;

    static VariableOrdering identity(int n);

    /// Build from the rank->variable permutation (rank 0 first).
    /// Throws Error unless it is a permutation of {0,...,n-1}.
    static VariableOrdering from_rank_list(std::vector<int> rank_to_var);

    int vars() const { return static_cast<int>(rank_to_var_.size()); }
    int var_at_rank(int rank) const;
    int rank_of(int var) const;

    const std::vector<int>& rank_to_var() const { return rank_to_var_; }

    bool is_identity() const;

    friend bool operator==(const VariableOrdering&, const VariableOrdering&) = default;

private:
    std::vector<int> rank_to_var_;
    std::vector<int> var_to_rank_;
};

enum class Cmp { lt, eq, gt };

/// Lexicographic comparison of a and b under ord: the term with the
/// smaller exponent at the highest rank where they differ is smaller.
Cmp lex_compare(const Term& a, const Term& b, const VariableOrdering& ord);

bool lex_less(const Term& a, const Term& b, const VariableOrdering& ord);

/// Suffix projection: zero out the exponents of every variable of rank
/// below `rank`, keep ranks >= rank. rank 0 is the identity.
Term pi_projection(const Term& t, int rank, const VariableOrdering& ord);

/// Componentwise divisibility: a | b.
bool divides(const Term& a, const Term& b);

/// b / a. Precondition: divides(a, b).
Term quotient(const Term& b, const Term& a);

/// Rewrite t into rank coordinates: position r holds the exponent of the
/// rank-r variable. Under the identity ordering this is a copy.
Term relabel(const Term& t, const VariableOrdering& ord);

/// A finite duplicate-free set of terms over a common ambient variable
/// count. Input order is preserved.
class TermSet {
public:
    TermSet() = default;
    TermSet(int n, std::vector<Term> terms);

    int vars() const { return n_; }
    int size() const { return static_cast<int>(terms_.size()); }
    bool empty() const { return terms_.empty(); }

    const std::vector<Term>& terms() const { return terms_; }
    const Term& operator[](int i) const { return terms_[static_cast<size_t>(i)]; }

    bool contains(const Term& t) const { return index_.count(t.exponents()) != 0; }

    /// Terms sorted ascending by lex under ord.
    std::vector<Term> sorted_by(const VariableOrdering& ord) const;

private:
    int n_ = 0;
    std::vector<Term> terms_;
    std::set<Exponents> index_;
};

/// The set of degrees attained by `var` over M (empty M gives the empty
/// set). Also available for a plain span of terms, as used by the
/// ordering search on bar groups.
std::set<int> degree_profile(const TermSet& M, int var);
std::set<int> degree_profile(std::span<const Term> terms, int var);

namespace detail {
void check_same_vars(const Term& a, const Term& b, const char* what);
}

}  // namespace barcode
