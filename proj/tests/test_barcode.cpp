#include <doctest.h>

#include <random>

#include "barcode/barcode.hpp"
#include "barcode/generate.hpp"
#include "barcode/text.hpp"
#include "oracles.hpp"

using namespace barcode;
using oracles::ord;
using oracles::tm;
using oracles::ts;

namespace {

std::vector<int> row_lengths(const BarCode& b, int rank) {
    std::vector<int> out;
    for (const Bar& bar : b.row(rank)) out.push_back(bar.length());
    return out;
}

// All (M, ord) invariants of a built bar code in one place.
void check_structure(const TermSet& m, const VariableOrdering& o) {
    const BarCode b = BarCode::build(m, o);
    b.validate();

    // every row's 1-lengths sum to the column count
    for (int r = 0; r < b.vars(); ++r) {
        int sum = 0;
        for (const Bar& bar : b.row(r)) sum += bar.length();
        CHECK(sum == b.columns());
    }

    // decode returns the columns themselves
    const std::vector<Term> decoded = decode(b);
    REQUIRE(decoded.size() == static_cast<size_t>(b.columns()));
    for (int j = 0; j < b.columns(); ++j)
        CHECK(decoded[static_cast<size_t>(j)] == b.column_terms()[static_cast<size_t>(j)]);

    // e-lists are the rank-ordered exponents of the decoded labels
    for (int j = 0; j < b.columns(); ++j) {
        const EList e = elist(b, j);
        const Term rel = relabel(decoded[static_cast<size_t>(j)], o);
        for (int k = 0; k < b.vars(); ++k)
            CHECK(e.by_rank_desc[static_cast<size_t>(k)] == rel.exponent(b.vars() - 1 - k));
    }

    // admissibility agrees with the direct order-ideal scan
    CHECK(is_admissible(b) == oracles::is_order_ideal(decoded));

    // star marking rules: last bar of every row starred, inner bars
    // starred iff the neighbour sits over a different parent bar
    const StarMarking marks = star_marking(b);
    for (int r = 0; r < b.vars(); ++r) {
        const auto& row = b.row(r);
        for (size_t j = 0; j < row.size(); ++j) {
            bool expected;
            if (j + 1 == row.size())
                expected = true;
            else if (r + 1 == b.vars())
                expected = false;
            else
                expected = b.bar_index_at(r + 1, row[j].start) !=
                           b.bar_index_at(r + 1, row[j + 1].start);
            CHECK(marks.contains(r, static_cast<int>(j)) == expected);
        }
    }
}

}  // namespace

TEST_CASE("bar code of the five-term running example") {
    const TermSet m = ts("x1, x1^2, x2*x3, x1*x2^2*x3, x2^3*x3", 3);
    const BarCode b = BarCode::build(m, VariableOrdering::identity(3));

    CHECK(row_lengths(b, 0) == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(row_lengths(b, 1) == std::vector<int>{2, 1, 1, 1});
    CHECK(row_lengths(b, 2) == std::vector<int>{2, 3});

    const std::vector<Term> expect = {tm("x1", 3), tm("x1^2", 3), tm("x2*x3", 3),
                                      tm("x1*x2^2*x3", 3), tm("x2^3*x3", 3)};
    CHECK(b.column_terms() == expect);
    CHECK(decode(b) == expect);

    // e-list of the x2^3*x3 column, ranks (x3, x2, x1)
    CHECK(elist(b, 4) == EList{{1, 3, 0}});

    CHECK_FALSE(is_admissible(b));  // x2*x3 is in M but x2 is not
    CHECK_THROWS_AS(star_set(b), AdmissibilityError);
}

TEST_CASE("bar code of a singleton") {
    const TermSet m = ts("x1*x3^2", 3);
    const BarCode b = BarCode::build(m, VariableOrdering::identity(3));
    for (int r = 0; r < 3; ++r) CHECK(row_lengths(b, r) == std::vector<int>{1});
    CHECK(decode(b) == std::vector<Term>{tm("x1*x3^2", 3)});
    const StarMarking marks = star_marking(b);
    for (int r = 0; r < 3; ++r) CHECK(marks.contains(r, 0));
}

TEST_CASE("order ideal {1,x1,x2,x3}: decode, e-lists, star set") {
    // Hand-built geometry; canonical degrees reproduce the escalier.
    const BarCode b = BarCode::from_spans(
        3, 4,
        {{{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {{0, 2}, {2, 3}, {3, 4}}, {{0, 3}, {3, 4}}});
    const std::vector<Term> expect = {tm("1", 3), tm("x1", 3), tm("x2", 3), tm("x3", 3)};
    CHECK(decode(b) == expect);
    CHECK(elist(b, 3) == EList{{1, 0, 0}});
    CHECK(elist(b, 0) == EList{{0, 0, 0}});
    CHECK(is_admissible(b));

    const TermSet f = star_set(b);
    const TermSet expect_f = ts("x1^2, x1*x2, x1*x3, x2^2, x2*x3, x3^2", 3);
    REQUIRE(f.size() == 6);
    for (const Term& t : expect_f.terms()) CHECK(f.contains(t));

    // same thing built from the term set
    const BarCode b2 = BarCode::build(ts("1, x1, x2, x3", 3), VariableOrdering::identity(3));
    CHECK(decode(b2) == expect);
    const TermSet f2 = star_set(b2);
    CHECK(f2.terms() == f.terms());

    // row-major reading of the star set is lex ascending
    const auto sorted = f2.sorted_by(VariableOrdering::identity(3));
    CHECK(f2.terms() == sorted);
}

TEST_CASE("star set corner cases") {
    // {1} in three variables
    const BarCode b = BarCode::build(ts("1", 3), VariableOrdering::identity(3));
    const TermSet f = star_set(b);
    CHECK(f.terms() == std::vector<Term>{tm("x1", 3), tm("x2", 3), tm("x3", 3)});

    // {1, x1} in two variables -> {x1^2, x2}
    const BarCode b2 = BarCode::build(ts("1, x1", 2), VariableOrdering::identity(2));
    const TermSet f2 = star_set(b2);
    CHECK(f2.terms() == std::vector<Term>{tm("x1^2", 2), tm("x2", 2)});

    // matches the closed formula
    const auto formula = oracles::star_set_formula(ts("1, x1", 2), VariableOrdering::identity(2));
    REQUIRE(formula.size() == 2);
    for (const Term& t : f2.terms()) CHECK(formula.count(t.exponents()));
}

TEST_CASE("star pattern of the four-term example") {
    const TermSet m = ts("x1^3, x2^3, x1^4*x2*x3, x3^2", 3);
    const BarCode b = BarCode::build(m, VariableOrdering::identity(3));
    CHECK(b.column_terms() == std::vector<Term>{tm("x1^3", 3), tm("x2^3", 3),
                                                tm("x1^4*x2*x3", 3), tm("x3^2", 3)});
    const StarMarking marks = star_marking(b);
    CHECK(marks.starred[0] == std::vector<bool>{true, true, true, true});
    CHECK(marks.starred[1] == std::vector<bool>{false, true, true, true});
    CHECK(marks.starred[2] == std::vector<bool>{false, false, true});
}

TEST_CASE("ten-term example under x1<x2<x4<x3") {
    const TermSet m = ts(
        "x2*x3, x1^2, x3^2, x2^2, x1*x2, x1*x2*x4, x1^2*x4, x4*x3, x2^2*x4, x1^2*x3", 4);
    const auto o = ord("x1<x2<x4<x3", 4);
    const BarCode b = BarCode::build(m, o);

    CHECK(row_lengths(b, 3) == std::vector<int>{6, 3, 1});
    CHECK(row_lengths(b, 2) == std::vector<int>{3, 3, 2, 1, 1});

    const std::vector<Term> cols = {
        tm("x1^2", 4),      tm("x1*x2", 4),    tm("x2^2", 4),    tm("x1^2*x4", 4),
        tm("x1*x2*x4", 4),  tm("x2^2*x4", 4),  tm("x1^2*x3", 4), tm("x2*x3", 4),
        tm("x3*x4", 4),     tm("x3^2", 4)};
    CHECK(b.column_terms() == cols);

    const StarMarking marks = star_marking(b);
    CHECK(marks.starred[0] ==
          std::vector<bool>{true, true, true, true, true, true, true, true, true, true});
    CHECK(marks.starred[1] ==
          std::vector<bool>{false, false, true, false, false, true, false, true, true, true});
    CHECK(marks.starred[2] == std::vector<bool>{false, true, false, true, true});
    CHECK(marks.starred[3] == std::vector<bool>{false, false, true});
}

TEST_CASE("build rejects bad input") {
    CHECK_THROWS_AS(BarCode::build(TermSet{}, VariableOrdering::identity(0)), Error);
    CHECK_THROWS_AS(BarCode::build(ts("x1", 2), VariableOrdering::identity(3)), Error);
}

TEST_CASE("malformed geometry is rejected") {
    // rows of different total length
    CHECK_THROWS_AS(BarCode::from_spans(2, 2, {{{0, 1}, {1, 2}}, {{0, 1}}}),
                    InvariantViolation);
    // crossing bars: a middle-row bar spans two coarser bars
    CHECK_THROWS_AS(
        BarCode::from_spans(3, 2, {{{0, 1}, {1, 2}}, {{0, 2}}, {{0, 1}, {1, 2}}}),
        InvariantViolation);
    // rank-0 row must be unit bars
    CHECK_THROWS_AS(BarCode::from_spans(2, 2, {{{0, 2}}, {{0, 2}}}), InvariantViolation);
}

TEST_CASE("structural invariants on random sets and ideals") {
    std::mt19937_64 rng(90210);
    for (int iter = 0; iter < 150; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const TermSet m = (iter % 3 == 0) ? random_order_ideal(rng, n, 2, 3)
                                          : random_term_set(rng, n, 12, 4);
        check_structure(m, random_ordering(rng, n));
    }
}

TEST_CASE("star set equals the closed formula on random order ideals") {
    std::mt19937_64 rng(5150);
    for (int iter = 0; iter < 60; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const TermSet ideal = random_order_ideal(rng, n, 2, 3);
        const auto o = random_ordering(rng, n);
        const BarCode b = BarCode::build(ideal, o);
        REQUIRE(is_admissible(b));
        const TermSet f = star_set(b);
        const auto formula = oracles::star_set_formula(ideal, o);
        REQUIRE(f.terms().size() == formula.size());
        for (const Term& t : f.terms()) CHECK(formula.count(t.exponents()));
        CHECK(f.terms() == f.sorted_by(o));  // lex reading order
    }
}
