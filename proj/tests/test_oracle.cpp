#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wordgrid/analysis.hpp"
#include "wordgrid/count.hpp"
#include "wordgrid/errors.hpp"
#include "wordgrid/oracle.hpp"

using namespace wordgrid;

TEST_CASE("exact 1-D maxima match the closed form") {
    for (const char* s : {"AB", "ABB", "ABBB", "ABA", "ABBA", "BABBB"}) {
        Word w{s};
        CAPTURE(s);
        Rational best = 0;
        for (long n = 1; n <= 10; ++n) {
            OracleResult r = max_concentration(w, Shape{{n}});
            REQUIRE(r.complete);
            Rational b = r.best;
            if (b > best)
                best = b;
        }
        CHECK(best == c1(w));
    }
}

TEST_CASE("verify_c1 wrapper") {
    CHECK(verify_c1(Word("ABB"), 10));
    CHECK(verify_c1(Word("BABBB"), 12));
    CHECK_THROWS_AS(verify_c1(Word("ABB"), 3), Error);  // needs n_max >= 2 ell
}

TEST_CASE("two-dimensional maximum for BABBB") {
    OracleResult r = max_concentration(Word("BABBB"), Shape{{5, 5}});
    REQUIRE(r.complete);
    CHECK(r.best == frac(8, 5));
    REQUIRE_FALSE(r.witnesses.empty());
    for (const Grid& g : r.witnesses)
        CHECK(concentration(Word("BABBB"), g) == r.best);
}

TEST_CASE("branch and bound agrees with plain enumeration") {
    Word w("ABB");
    OracleOptions plain;
    plain.branch_and_bound = false;
    for (std::vector<long> ext : {std::vector<long>{3, 3}, {2, 4}, {6}}) {
        Shape shape{ext};
        OracleResult a = max_concentration(w, shape);
        OracleResult b = max_concentration(w, shape, plain);
        CHECK(a.best == b.best);
        CHECK(a.nodes <= b.nodes);
    }
}

TEST_CASE("budget exhaustion is reported, not silently wrong") {
    OracleOptions opt;
    opt.node_budget = 10;
    OracleResult r = max_concentration(Word("BABBB"), Shape{{5, 5}}, opt);
    CHECK_FALSE(r.complete);
    CHECK(r.best <= frac(8, 5));  // still a valid lower bound
}

TEST_CASE("triple product inequality") {
    // indicator of a single cell in Z/3: mean 1/3
    std::vector<Rational> f{1, 0, 0};
    Lemma72Report r = lemma72_check(1, f);
    CHECK(r.rhs == frac(3, 2) * frac(1, 3) * frac(4, 9));
    CHECK(r.holds);

    // constant functions meet the bound only at the extremes
    for (int num = 0; num <= 4; ++num) {
        std::vector<Rational> c(3, frac(num, 4));
        CHECK(lemma72_check(1, c).holds);
    }
    CHECK_THROWS_AS(lemma72_check(1, {2, 0, 0}), DomainError);
    CHECK_THROWS_AS(lemma72_check(1, {1, 0}), DomainError);
}

TEST_CASE("search line spread on small cubes") {
    // all-A grid: zero spread but alpha min is 0, bound 0
    Grid flat(Shape{{3, 3}}, "AAAAAAAAA");
    SpreadReport r = searchline_spread(flat, 'A');
    CHECK(r.max_diff == 0);
    CHECK(r.holds);

    Grid diag(Shape{{3, 3}}, "ABBBABBBA");
    r = searchline_spread(diag, 'A');
    CHECK(r.holds);
    CHECK(r.max_diff >= 1);

    CHECK_THROWS_AS(searchline_spread(Grid(Shape{{4, 4}}, std::string(16, 'A')), 'A'),
                    Error);  // needs n < 2^d
}
