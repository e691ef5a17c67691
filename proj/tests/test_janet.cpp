#include <doctest.h>

#include <random>

#include "barcode/generate.hpp"
#include "barcode/janet.hpp"
#include "barcode/text.hpp"
#include "oracles.hpp"

using namespace barcode;
using oracles::ord;
using oracles::tm;
using oracles::ts;

namespace {

void check_equal_decompositions(const JanetDecomposition& a, const JanetDecomposition& b) {
    REQUIRE(a.terms.size() == b.terms.size());
    for (size_t i = 0; i < a.terms.size(); ++i) {
        CHECK(a.terms[i] == b.terms[i]);
        CHECK(a.mult[i] == b.mult[i]);
        CHECK(a.nonmult[i] == b.nonmult[i]);
    }
}

void check_equal_reports(const CompletenessReport& a, const CompletenessReport& b) {
    CHECK(a.complete == b.complete);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (size_t i = 0; i < a.witnesses.size(); ++i) {
        CHECK(a.witnesses[i].term == b.witnesses[i].term);
        CHECK(a.witnesses[i].var == b.witnesses[i].var);
        CHECK(a.witnesses[i].divisor == b.witnesses[i].divisor);
    }
    CHECK(a.first_failure == b.first_failure);
}

}  // namespace

TEST_CASE("multiplicative variables by definition") {
    const TermSet u = ts("x1^3, x2^3, x1^4*x2*x3, x3^2", 3);
    const auto id3 = VariableOrdering::identity(3);
    const auto [mult, nonmult] = mult_vars_definition(tm("x1^3", 3), u, id3);
    CHECK(mult == std::vector<int>{0});
    CHECK(nonmult == std::vector<int>{1, 2});

    CHECK_THROWS_AS(mult_vars_definition(tm("x1", 3), u, id3), Error);

    // singletons have every variable multiplicative
    const TermSet single = ts("x1^2*x3", 3);
    const auto [m1, n1] = mult_vars_definition(tm("x1^2*x3", 3), single, id3);
    CHECK(m1 == std::vector<int>{0, 1, 2});
    CHECK(n1.empty());
}

TEST_CASE("the split depends on the ordering") {
    const TermSet u = ts("x1, x2", 2);
    const auto dec1 = mult_vars_definition_all(u, VariableOrdering::identity(2));
    // columns under identity: x1 < x2
    CHECK(dec1.mult_of(tm("x1", 2)) == std::vector<int>{0});
    CHECK(dec1.nonmult_of(tm("x1", 2)) == std::vector<int>{1});
    CHECK(dec1.mult_of(tm("x2", 2)) == std::vector<int>{0, 1});
    CHECK(dec1.nonmult_of(tm("x2", 2)).empty());

    const auto dec2 = mult_vars_definition_all(u, ord("x2<x1", 2));
    CHECK(dec2.mult_of(tm("x1", 2)) == std::vector<int>{0, 1});
    CHECK(dec2.mult_of(tm("x2", 2)) == std::vector<int>{1});
    CHECK(dec2.nonmult_of(tm("x2", 2)) == std::vector<int>{0});

    // the bar code route reproduces both
    check_equal_decompositions(dec1, mult_vars_barcode(u, VariableOrdering::identity(2)));
    check_equal_decompositions(dec2, mult_vars_barcode(u, ord("x2<x1", 2)));
}

TEST_CASE("bar code decomposition of the four-term example") {
    const TermSet u = ts("x1^3, x2^3, x1^4*x2*x3, x3^2", 3);
    const auto dec = mult_vars_barcode(u, VariableOrdering::identity(3));
    CHECK(dec.mult_of(tm("x1^3", 3)) == std::vector<int>{0});
    CHECK(dec.nonmult_of(tm("x1^3", 3)) == std::vector<int>{1, 2});
    CHECK(dec.mult_of(tm("x2^3", 3)) == std::vector<int>{0, 1});
    CHECK(dec.nonmult_of(tm("x2^3", 3)) == std::vector<int>{2});
    CHECK(dec.mult_of(tm("x1^4*x2*x3", 3)) == std::vector<int>{0, 1});
    CHECK(dec.nonmult_of(tm("x1^4*x2*x3", 3)) == std::vector<int>{2});
    CHECK(dec.mult_of(tm("x3^2", 3)) == std::vector<int>{0, 1, 2});
    check_equal_decompositions(dec, mult_vars_definition_all(u, VariableOrdering::identity(3)));
}

TEST_CASE("two-variable example {x^2, xy}") {
    const TermSet u = ts("x1^2, x1*x2", 2);
    const auto id2 = VariableOrdering::identity(2);
    const auto dec = mult_vars_barcode(u, id2);
    CHECK(dec.mult_of(tm("x1^2", 2)) == std::vector<int>{0});
    CHECK(dec.mult_of(tm("x1*x2", 2)) == std::vector<int>{0, 1});

    CHECK(involutive_divisor(tm("x1^2*x2", 2), u, dec) == tm("x1*x2", 2));

    const auto rep = is_complete_definition(u, id2);
    CHECK(rep.complete);
    REQUIRE(rep.witnesses.size() == 1);
    CHECK(rep.witnesses[0].term == tm("x1^2", 2));
    CHECK(rep.witnesses[0].var == 1);
    CHECK(rep.witnesses[0].divisor == tm("x1*x2", 2));
    check_equal_reports(rep, is_complete_barcode(u, id2));
    CHECK(is_complete_recursive(u, id2));
}

TEST_CASE("cones") {
    CHECK(cone_contains(tm("x1^5", 3), tm("x1^3", 3), {0}));
    CHECK(cone_contains(tm("x1^3", 3), tm("x1^3", 3), {}));
    CHECK_FALSE(cone_contains(tm("x1^3*x2^2", 2), tm("x1*x2^3", 2), {0, 1}));
    CHECK_FALSE(cone_contains(tm("x1^3*x2", 3), tm("x1^3", 3), {0}));
    CHECK_THROWS_AS(cone_contains(Term{{1}}, Term{{1, 0}}, {}), Error);
}

TEST_CASE("involutive divisor lookup") {
    const TermSet u = ts("x1^3, x2^3, x1^4*x2*x3, x3^2", 3);
    const auto dec = mult_vars_definition_all(u, VariableOrdering::identity(3));
    CHECK_FALSE(involutive_divisor(tm("x1^3*x2", 3), u, dec).has_value());
    // a member term is its own (unique) involutive divisor
    CHECK(involutive_divisor(tm("x2^3", 3), u, dec) == tm("x2^3", 3));
}

TEST_CASE("incomplete four-term example") {
    const TermSet u = ts("x1^3, x2^3, x1^4*x2*x3, x3^2", 3);
    const auto id3 = VariableOrdering::identity(3);
    const auto rep = is_complete_definition(u, id3);
    CHECK_FALSE(rep.complete);
    REQUIRE(rep.first_failure.has_value());
    CHECK(rep.first_failure->first == tm("x1^3", 3));
    CHECK(rep.first_failure->second == 1);
    check_equal_reports(rep, is_complete_barcode(u, id3));
    CHECK_FALSE(is_complete_recursive(u, id3));
}

TEST_CASE("completeness corner cases") {
    const auto id3 = VariableOrdering::identity(3);
    CHECK(is_complete_definition(ts("x1^2*x2*x3", 3), id3).complete);  // singleton
    CHECK(is_complete_recursive(ts("x1^2*x2*x3", 3), id3));
    CHECK_THROWS_AS(is_complete_definition(TermSet{}, VariableOrdering::identity(0)), Error);

    // the two-term set with degree gaps fails under both orderings
    const TermSet gap = ts("x1*x2^3, x1^3*x2", 2);
    for (const char* o : {"identity", "x2<x1"}) {
        CHECK_FALSE(is_complete_definition(gap, ord(o, 2)).complete);
        CHECK_FALSE(is_complete_barcode(gap, ord(o, 2)).complete);
        CHECK_FALSE(is_complete_recursive(gap, ord(o, 2)));
    }
}

TEST_CASE("ten-term example is complete under x1<x2<x4<x3") {
    const TermSet m = ts(
        "x2*x3, x1^2, x3^2, x2^2, x1*x2, x1*x2*x4, x1^2*x4, x4*x3, x2^2*x4, x1^2*x3", 4);
    const auto o = ord("x1<x2<x4<x3", 4);
    CHECK(is_complete_definition(m, o).complete);
    CHECK(is_complete_barcode(m, o).complete);
    CHECK(is_complete_recursive(m, o));
}

TEST_CASE("only t itself lies in cone(t) among members") {
    std::mt19937_64 rng(424242);
    for (int iter = 0; iter < 80; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const TermSet u = random_term_set(rng, n, 10, 3);
        const auto o = random_ordering(rng, n);
        const auto dec = mult_vars_definition_all(u, o);
        for (const Term& t : u.terms())
            for (const Term& w : u.terms())
                if (cone_contains(w, t, dec.mult_of(t))) CHECK(w == t);
    }
}

TEST_CASE("oracle equivalences on random sets") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 120; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const TermSet u = random_term_set(rng, n, 12, 4);
        const auto o = random_ordering(rng, n);

        check_equal_decompositions(mult_vars_definition_all(u, o), mult_vars_barcode(u, o));

        const auto def = is_complete_definition(u, o);
        check_equal_reports(def, is_complete_barcode(u, o));
        CHECK(def.complete == is_complete_recursive(u, o));

        // cone disjointness on random probes
        const auto dec = mult_vars_definition_all(u, o);
        for (int probe = 0; probe < 5; ++probe) {
            Exponents e(static_cast<size_t>(n));
            for (int& g : e) g = static_cast<int>(rng() % 6);
            int owners = 0;
            for (const Term& t : dec.terms)
                if (cone_contains(Term{e}, t, dec.mult_of(t))) ++owners;
            CHECK(owners <= 1);
        }
    }
}
