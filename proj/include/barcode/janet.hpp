#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "barcode/barcode.hpp"
#include "barcode/term.hpp"

namespace barcode {

/// Multiplicative / non-multiplicative variable split of every term of a
/// set, relative to a variable ordering. Terms are kept in lex order
/// under that ordering (the bar code column order).
struct JanetDecomposition {
    VariableOrdering ord;
    std::vector<Term> terms;                 // lex-sorted under ord
    std::vector<std::vector<int>> mult;      // ascending variable indices
    std::vector<std::vector<int>> nonmult;

    int index_of(const Term& t) const;       // -1 when absent
    const std::vector<int>& mult_of(const Term& t) const;
    const std::vector<int>& nonmult_of(const Term& t) const;
};

/// Decide the split for one term straight from the definition: x_j is
/// multiplicative for t iff no term of U agrees with t at every rank
/// above rank(x_j) and has a strictly larger x_j-exponent. This direct
/// scan is the reference everything bar-code based is checked against.
/// Returns (mult, nonmult); throws when t is not an element of U.
std::pair<std::vector<int>, std::vector<int>> mult_vars_definition(
    const Term& t, const TermSet& U, const VariableOrdering& ord);

/// The whole decomposition through the definition scan.
JanetDecomposition mult_vars_definition_all(const TermSet& U, const VariableOrdering& ord);

/// The whole decomposition read off the bar code: x_i is multiplicative
/// for t iff the rank-i bar under t's column is starred.
JanetDecomposition mult_vars_barcode(const TermSet& U, const VariableOrdering& ord);

/// Membership of w in the cone of t spanned by the given multiplicative
/// variables: t divides w and w/t involves only those variables.
bool cone_contains(const Term& w, const Term& t, const std::vector<int>& mult);

/// The unique term of U whose cone contains w, or nullopt. Janet cones
/// are pairwise disjoint; two matches raise InvariantViolation.
std::optional<Term> involutive_divisor(const Term& w, const TermSet& U,
                                       const JanetDecomposition& dec);

/// One (term, non-multiplicative variable) obligation: the involutive
/// divisor of term * x_var, or nullopt when none exists.
struct CompletenessWitness {
    Term term;
    int var = 0;
    std::optional<Term> divisor;
};

struct CompletenessReport {
    bool complete = false;
    std::vector<CompletenessWitness> witnesses;  // term lex order, then rank
    std::optional<std::pair<Term, int>> first_failure;
};

/// Completeness straight from the definition: for every t and every
/// non-multiplicative x_j, search all of U for a cone containing x_j*t.
CompletenessReport is_complete_definition(const TermSet& U, const VariableOrdering& ord);

/// Completeness through the bar code criterion: candidates for the
/// involutive divisor of x_i*t are only the terms over the next i-bar,
/// and the quotient's variables must all be starred for the candidate.
CompletenessReport is_complete_barcode(const TermSet& U, const VariableOrdering& ord);

/// Completeness by recursion on the maximal variable: slice U by its
/// top-rank degree, require every slice complete in one fewer variable,
/// and every term of a non-top slice to lie in a cone of the next slice.
bool is_complete_recursive(const TermSet& U, const VariableOrdering& ord);

}  // namespace barcode
