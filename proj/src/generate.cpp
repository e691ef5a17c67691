#include "barcode/generate.hpp"

#include <algorithm>
#include <set>

#include "barcode/errors.hpp"

namespace barcode {

TermSet random_term_set(std::uint64_t seed, int n, int size, int max_exp) {
    std::mt19937_64 rng(seed);
    return random_term_set(rng, n, size, max_exp);
}

TermSet random_term_set(std::mt19937_64& rng, int n, int size, int max_exp) {
    if (n < 1) throw Error("need at least one variable");
    if (size < 1) throw Error("need at least one term");
    if (max_exp < 0) throw Error("negative exponent bound");

    double box = 1;
    for (int i = 0; i < n && box <= size; ++i) box *= max_exp + 1;
    const int target = box < size ? static_cast<int>(box) : size;

    std::uniform_int_distribution<int> dist(0, max_exp);
    std::set<Exponents> seen;
    std::vector<Term> terms;
    while (static_cast<int>(terms.size()) < target) {
        Exponents e(static_cast<size_t>(n));
        for (int& g : e) g = dist(rng);
        if (seen.insert(e).second) terms.emplace_back(std::move(e));
    }
    return TermSet(n, std::move(terms));
}

TermSet random_order_ideal(std::uint64_t seed, int n, int corners, int max_exp) {
    std::mt19937_64 rng(seed);
    return random_order_ideal(rng, n, corners, max_exp);
}

TermSet random_order_ideal(std::mt19937_64& rng, int n, int corners, int max_exp) {
    if (n < 1) throw Error("need at least one variable");
    if (corners < 1) throw Error("need at least one corner");
    if (max_exp < 0) throw Error("negative exponent bound");

    std::uniform_int_distribution<int> dist(0, max_exp);
    std::set<Exponents> members;
    members.insert(Exponents(static_cast<size_t>(n), 0));
    for (int k = 0; k < corners; ++k) {
        Exponents corner(static_cast<size_t>(n));
        for (int& g : corner) g = dist(rng);
        // Enumerate the whole divisor box of the corner.
        Exponents cur(static_cast<size_t>(n), 0);
        for (;;) {
            members.insert(cur);
            int i = 0;
            while (i < n && cur[static_cast<size_t>(i)] == corner[static_cast<size_t>(i)]) {
                cur[static_cast<size_t>(i)] = 0;
                ++i;
            }
            if (i == n) break;
            ++cur[static_cast<size_t>(i)];
        }
    }
    std::vector<Term> terms;
    terms.reserve(members.size());
    for (const Exponents& e : members) terms.emplace_back(e);
    return TermSet(n, std::move(terms));
}

VariableOrdering random_ordering(std::mt19937_64& rng, int n) {
    std::vector<int> ranks(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ranks[static_cast<size_t>(i)] = i;
    std::shuffle(ranks.begin(), ranks.end(), rng);
    return VariableOrdering::from_rank_list(std::move(ranks));
}

}  // namespace barcode
