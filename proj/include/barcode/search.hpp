#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "barcode/term.hpp"

namespace barcode {

/// One bar of a partially drawn bar code (columns of the current
/// arrangement, the degree of the level's variable, and whether the bar
/// is followed by a star — which is final as soon as the level is
/// drawn).
struct SearchBar {
    int start = 0;
    int end = 0;
    int degree = 0;
    bool starred = false;

    int length() const { return end - start; }

    friend bool operator==(const SearchBar&, const SearchBar&) = default;
};

struct SearchLevel {
    int var = 0;  // the variable placed at this level
    std::vector<SearchBar> bars;
};

/// A candidate involutive divisor u of t * x_j together with the support
/// of (t * x_j) / u. The candidate survives as long as every variable of
/// that support, once placed, turns out multiplicative for u.
struct DivisorCandidate {
    Term divisor;
    std::vector<int> residual;  // ascending variable indices

    friend bool operator==(const DivisorCandidate&, const DivisorCandidate&) = default;
};

/// The per-(term, placed variable) candidate sets maintained by the
/// search. Keys are ordered, so iteration is deterministic.
class CandidateMap {
public:
    using Key = std::pair<Exponents, int>;  // (term exponents, variable)

    bool empty() const { return entries_.empty(); }
    void set(const Term& t, int var, std::vector<DivisorCandidate> cands);
    const std::vector<DivisorCandidate>* find(const Term& t, int var) const;

    std::map<Key, std::vector<DivisorCandidate>>& entries() { return entries_; }
    const std::map<Key, std::vector<DivisorCandidate>>& entries() const { return entries_; }

private:
    std::map<Key, std::vector<DivisorCandidate>> entries_;
};

/// The bar code under construction, from the maximal variable downwards.
/// Each placed level refines the previous one; within every bar the
/// placed variable's degree is constant.
class PartialBarCode {
public:
    /// Starting state: no variable placed, columns arranged ascending by
    /// lex under the identity ordering (a canonical start so the search
    /// is a function of the set, not of its input order).
    static PartialBarCode initial(const TermSet& M);

    const TermSet& base() const { return base_; }
    int vars() const { return base_.vars(); }
    int columns() const { return static_cast<int>(column_terms_.size()); }

    const std::vector<Term>& column_terms() const { return column_terms_; }
    const std::vector<SearchLevel>& levels() const { return levels_; }

    std::vector<int> placed() const;
    std::vector<int> remaining() const;

    /// Term groups of the deepest level's bars (one group = all columns,
    /// when nothing is placed yet).
    std::vector<std::vector<Term>> groups() const;

    bool deepest_unitary() const;

    /// Draw the bars of `var` inside every current bar: stable-sort each
    /// bar's columns by the variable's degree and split into runs. Star
    /// flags of the new level are final. Throws when var is placed
    /// already.
    PartialBarCode place(int var) const;

    /// Is `var` (which must be placed) multiplicative for t, i.e. is the
    /// var-level bar under t starred?
    bool starred_for(const Term& t, int var) const;

private:
    TermSet base_;
    std::vector<Term> column_terms_;   // current arrangement
    std::vector<SearchLevel> levels_;  // levels_[0] = maximal variable
    std::vector<bool> placed_mask_;
};

/// Degree-gap screen: drop from C every variable whose attained degree
/// set over the terms skips a value below its maximum. A variable with
/// such a gap cannot be the maximal one of a complete arrangement.
std::vector<int> candidate_var(std::span<const Term> terms, const std::vector<int>& C);

/// The screen applied to each group independently, intersected.
std::vector<int> candidates(const std::vector<std::vector<Term>>& groups,
                            const std::vector<int>& C);

/// One Friends pass for the deepest placed level x_j of `state`:
///  (i)  for every term t over an unstarred x_j-bar, collect the
///       candidate involutive divisors of t * x_j from the next bar;
///       fail when any such set is empty;
///  (ii) prune every entry of `prior`: a candidate (u, residual) with
///       x_j in its residual survives only if x_j is multiplicative for
///       u; fail when an entry empties.
/// Returns the merged map, or nullopt for failure (revoke x_j).
std::optional<CandidateMap> friends(const PartialBarCode& state, const CandidateMap& prior);

struct TraceEvent {
    enum class Kind {
        choose,             // a variable was placed at the current level
        friends_failed,     // ...and immediately rejected by Friends
        revoked,            // ...or revoked after its subtree failed
        no_candidates,      // the degree screen left nothing at this level
        unitary,            // every current bar is unitary; any completion works
        success,            // a full ordering was assembled and verified
    };
    Kind kind;
    int var = -1;  // the variable concerned; -1 for level-wide events

    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

/// Extend `state` (whose deepest level already passed friends) to a full
/// placement of the remaining variables. Candidate variables are tried
/// in ascending index order; on success returns them in placement order
/// (next-placed first). The unitary case short-circuits: remaining
/// variables are appended in ascending index order.
std::optional<std::vector<int>> common(const PartialBarCode& state, const CandidateMap& T,
                                       std::vector<TraceEvent>* trace = nullptr,
                                       std::optional<std::vector<int>>* unitary_prefix = nullptr);

struct SearchResult {
    std::optional<VariableOrdering> ordering;
    std::vector<TraceEvent> trace;
    /// The variables placed (maximal first) at the moment the unitary
    /// case fired, when it did.
    std::optional<std::vector<int>> unitary_prefix;
};

/// The greedy backtracking search for an ordering making M complete.
/// Deterministic; the returned ordering is re-verified against the
/// definition of completeness before being handed back.
SearchResult find_ordering(const TermSet& M);

/// All orderings under which M is complete, by exhaustive enumeration.
/// Refuses to run (CapExceeded) when M has more than `cap` variables.
std::vector<VariableOrdering> brute_force_orderings(const TermSet& M, int cap = 8);

}  // namespace barcode
