#include "barcode/search.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "barcode/errors.hpp"
#include "barcode/janet.hpp"
#include "barcode/text.hpp"

namespace barcode {

void CandidateMap::set(const Term& t, int var, std::vector<DivisorCandidate> cands) {
    entries_[{t.exponents(), var}] = std::move(cands);
}

const std::vector<DivisorCandidate>* CandidateMap::find(const Term& t, int var) const {
    auto it = entries_.find({t.exponents(), var});
    return it == entries_.end() ? nullptr : &it->second;
}

PartialBarCode PartialBarCode::initial(const TermSet& M) {
    if (M.empty()) throw Error("cannot search over an empty term set");
    PartialBarCode st;
    st.base_ = M;
    st.column_terms_ = M.sorted_by(VariableOrdering::identity(M.vars()));
    st.placed_mask_.assign(static_cast<size_t>(M.vars()), false);
    return st;
}

std::vector<int> PartialBarCode::placed() const {
    std::vector<int> out;
    out.reserve(levels_.size());
    for (const SearchLevel& l : levels_) out.push_back(l.var);
    return out;
}

std::vector<int> PartialBarCode::remaining() const {
    std::vector<int> out;
    for (int v = 0; v < vars(); ++v)
        if (!placed_mask_[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<std::vector<Term>> PartialBarCode::groups() const {
    std::vector<std::vector<Term>> out;
    if (levels_.empty()) {
        out.push_back(column_terms_);
        return out;
    }
    for (const SearchBar& bar : levels_.back().bars)
        out.emplace_back(column_terms_.begin() + bar.start, column_terms_.begin() + bar.end);
    return out;
}

bool PartialBarCode::deepest_unitary() const {
    if (levels_.empty()) return columns() == 1;
    return std::all_of(levels_.back().bars.begin(), levels_.back().bars.end(),
                       [](const SearchBar& b) { return b.length() == 1; });
}

PartialBarCode PartialBarCode::place(int var) const {
    if (var < 0 || var >= vars()) throw Error("variable index out of range");
    if (placed_mask_[static_cast<size_t>(var)])
        throw Error(var_name(var) + " is already placed");

    PartialBarCode st = *this;
    st.placed_mask_[static_cast<size_t>(var)] = true;

    std::vector<SearchBar> parents;
    if (levels_.empty())
        parents.push_back(SearchBar{0, columns(), 0, false});
    else
        parents = levels_.back().bars;

    SearchLevel level;
    level.var = var;
    std::set<int> parent_ends;
    for (const SearchBar& p : parents) parent_ends.insert(p.end);

    for (const SearchBar& p : parents) {
        auto first = st.column_terms_.begin() + p.start;
        auto last = st.column_terms_.begin() + p.end;
        std::stable_sort(first, last, [&](const Term& a, const Term& b) {
            return a.exponent(var) < b.exponent(var);
        });
        int run_start = p.start;
        for (int c = p.start; c < p.end; ++c) {
            const bool last_col = c + 1 == p.end;
            if (last_col || st.column_terms_[static_cast<size_t>(c)].exponent(var) !=
                                st.column_terms_[static_cast<size_t>(c + 1)].exponent(var)) {
                level.bars.push_back(SearchBar{
                    run_start, c + 1,
                    st.column_terms_[static_cast<size_t>(run_start)].exponent(var), false});
                run_start = c + 1;
            }
        }
    }
    for (SearchBar& bar : level.bars) bar.starred = parent_ends.count(bar.end) != 0;

    // Within a bar, a term must precede its proper multiples; the stable
    // degree sorts keep that from the lex-sorted start, but it is cheap
    // to confirm.
    for (const SearchBar& bar : level.bars)
        for (int i = bar.start; i < bar.end; ++i)
            for (int j = i + 1; j < bar.end; ++j) {
                const Term& a = st.column_terms_[static_cast<size_t>(i)];
                const Term& b = st.column_terms_[static_cast<size_t>(j)];
                if (divides(b, a) && !(a == b))
                    throw InvariantViolation("bar arrangement places " + to_string(b) +
                                             " after its multiple " + to_string(a));
            }

    st.levels_.push_back(std::move(level));
    return st;
}

bool PartialBarCode::starred_for(const Term& t, int var) const {
    const SearchLevel* level = nullptr;
    for (const SearchLevel& l : levels_)
        if (l.var == var) {
            level = &l;
            break;
        }
    if (!level) throw InvariantViolation(var_name(var) + " is not placed yet");
    for (int c = 0; c < columns(); ++c) {
        if (!(column_terms_[static_cast<size_t>(c)] == t)) continue;
        for (const SearchBar& bar : level->bars)
            if (bar.start <= c && c < bar.end) return bar.starred;
    }
    throw InvariantViolation("term " + to_string(t) + " not found among the columns");
}

std::vector<int> candidate_var(std::span<const Term> terms, const std::vector<int>& C) {
    std::vector<int> out;
    for (int v : C) {
        const std::set<int> profile = degree_profile(terms, v);
        bool gap = false;
        int prev = -1;
        for (int d : profile) {
            if (prev >= 0 && d != prev + 1) {
                gap = true;
                break;
            }
            prev = d;
        }
        if (!gap) out.push_back(v);
    }
    return out;
}

std::vector<int> candidates(const std::vector<std::vector<Term>>& groups,
                            const std::vector<int>& C) {
    std::vector<int> acc = C;
    for (const auto& group : groups) {
        std::vector<int> survivors =
            candidate_var(std::span<const Term>(group.data(), group.size()), acc);
        acc = std::move(survivors);
        if (acc.empty()) break;
    }
    return acc;
}

std::optional<CandidateMap> friends(const PartialBarCode& state, const CandidateMap& prior) {
    if (state.levels().empty()) throw Error("friends needs at least one placed level");
    const SearchLevel& level = state.levels().back();
    const int xj = level.var;
    const auto& cols = state.column_terms();

    CandidateMap next = prior;

    // New obligations: terms over unstarred bars need a candidate divisor
    // over the bar to their right.
    for (size_t b = 0; b < level.bars.size(); ++b) {
        const SearchBar& bar = level.bars[b];
        if (bar.starred) continue;
        if (b + 1 >= level.bars.size())
            throw InvariantViolation("unstarred bar at the end of a level");
        const SearchBar& right = level.bars[b + 1];
        for (int c = bar.start; c < bar.end; ++c) {
            const Term& t = cols[static_cast<size_t>(c)];
            const Term shifted = t.times_var(xj);
            std::vector<DivisorCandidate> cands;
            for (int c2 = right.start; c2 < right.end; ++c2) {
                const Term& u = cols[static_cast<size_t>(c2)];
                if (divides(u, shifted))
                    cands.push_back({u, quotient(shifted, u).support()});
            }
            if (cands.empty()) return std::nullopt;
            next.set(t, xj, std::move(cands));
        }
    }

    // Prune earlier obligations against the now-final stars of xj.
    for (auto& [key, cands] : next.entries()) {
        if (key.second == xj) continue;
        std::erase_if(cands, [&](const DivisorCandidate& cand) {
            return std::binary_search(cand.residual.begin(), cand.residual.end(), xj) &&
                   !state.starred_for(cand.divisor, xj);
        });
        if (cands.empty()) return std::nullopt;
    }
    return next;
}

namespace {

void trace_push(std::vector<TraceEvent>* trace, TraceEvent::Kind kind, int var = -1) {
    if (trace) trace->push_back({kind, var});
}

VariableOrdering ordering_from_placement(int n, const std::vector<int>& placement) {
    std::vector<int> rank_to_var(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        rank_to_var[static_cast<size_t>(n - 1 - k)] = placement[static_cast<size_t>(k)];
    return VariableOrdering::from_rank_list(std::move(rank_to_var));
}

}  // namespace

std::optional<std::vector<int>> common(const PartialBarCode& state, const CandidateMap& T,
                                       std::vector<TraceEvent>* trace,
                                       std::optional<std::vector<int>>* unitary_prefix) {
    std::vector<int> rem = state.remaining();
    if (rem.empty()) return std::vector<int>{};

    if (state.deepest_unitary()) {
        // Any arrangement of the remaining variables completes the set;
        // take them ascending for reproducibility.
        trace_push(trace, TraceEvent::Kind::unitary);
        if (unitary_prefix) *unitary_prefix = state.placed();
        return rem;
    }

    const std::vector<int> ys = candidates(state.groups(), rem);
    if (ys.empty()) {
        trace_push(trace, TraceEvent::Kind::no_candidates);
        return std::nullopt;
    }

    for (int x : ys) {
        trace_push(trace, TraceEvent::Kind::choose, x);
        const PartialBarCode placed = state.place(x);
        std::optional<CandidateMap> pruned = friends(placed, T);
        if (!pruned) {
            trace_push(trace, TraceEvent::Kind::friends_failed, x);
            continue;
        }
        std::optional<std::vector<int>> suffix = common(placed, *pruned, trace, unitary_prefix);
        if (suffix) {
            suffix->insert(suffix->begin(), x);
            return suffix;
        }
        trace_push(trace, TraceEvent::Kind::revoked, x);
    }
    return std::nullopt;
}

SearchResult find_ordering(const TermSet& M) {
    if (M.empty()) throw Error("cannot search over an empty term set");
    const int n = M.vars();

    SearchResult result;

    auto finish = [&](const std::vector<int>& placement) {
        VariableOrdering ord = ordering_from_placement(n, placement);
        if (!is_complete_definition(M, ord).complete)
            throw InvariantViolation("search returned " + to_string(ord) +
                                     " but the set is not complete under it");
        trace_push(&result.trace, TraceEvent::Kind::success);
        result.ordering = std::move(ord);
    };

    if (M.size() == 1) {
        // A singleton is complete under every ordering; report identity.
        trace_push(&result.trace, TraceEvent::Kind::unitary);
        result.unitary_prefix = std::vector<int>{};
        std::vector<int> placement(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) placement[static_cast<size_t>(k)] = n - 1 - k;
        finish(placement);
        return result;
    }

    const PartialBarCode start = PartialBarCode::initial(M);
    std::vector<int> all_vars(static_cast<size_t>(n));
    std::iota(all_vars.begin(), all_vars.end(), 0);
    const std::vector<int> top =
        candidate_var(std::span<const Term>(M.terms()), all_vars);
    if (top.empty()) trace_push(&result.trace, TraceEvent::Kind::no_candidates);

    for (int x : top) {
        trace_push(&result.trace, TraceEvent::Kind::choose, x);
        const PartialBarCode placed = start.place(x);
        std::optional<CandidateMap> T = friends(placed, CandidateMap{});
        if (!T) {
            trace_push(&result.trace, TraceEvent::Kind::friends_failed, x);
            continue;
        }
        std::optional<std::vector<int>> suffix =
            common(placed, *T, &result.trace, &result.unitary_prefix);
        if (suffix) {
            suffix->insert(suffix->begin(), x);
            finish(*suffix);
            return result;
        }
        trace_push(&result.trace, TraceEvent::Kind::revoked, x);
    }
    return result;
}

std::vector<VariableOrdering> brute_force_orderings(const TermSet& M, int cap) {
    if (M.empty()) throw Error("cannot enumerate orderings of an empty term set");
    if (M.vars() > cap)
        throw CapExceeded("refusing to enumerate " + std::to_string(M.vars()) +
                          "! orderings (cap " + std::to_string(cap) + ")");

    std::vector<int> ranks(static_cast<size_t>(M.vars()));
    std::iota(ranks.begin(), ranks.end(), 0);
    std::vector<VariableOrdering> out;
    do {
        VariableOrdering ord = VariableOrdering::from_rank_list(ranks);
        if (is_complete_definition(M, ord).complete) out.push_back(std::move(ord));
    } while (std::next_permutation(ranks.begin(), ranks.end()));
    return out;
}

}  // namespace barcode
