#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "wordgrid/count.hpp"
#include "wordgrid/errors.hpp"
#include "wordgrid/grid.hpp"
#include "wordgrid/queens.hpp"

using namespace wordgrid;

static const std::string kDataDir = WORDGRID_DATA_DIR;

TEST_CASE("polya placements are nonattacking") {
    for (long n : {5, 7, 11, 13, 17, 25}) {
        CAPTURE(n);
        QueensPlacement q = polya_queens(n);
        CHECK(q.positions.size() == static_cast<std::size_t>(n));
        CHECK(nonattacking(q));
    }
    CHECK_THROWS_AS(polya_queens(6), GcdError);
    CHECK_THROWS_AS(polya_queens(9), GcdError);
    CHECK_THROWS_AS(polya_queens(14), GcdError);
}

TEST_CASE("attacking placements are rejected by the checker") {
    QueensPlacement same_row{5, 2, {{0, 0}, {0, 3}}};
    CHECK_FALSE(nonattacking(same_row));
    QueensPlacement diagonal{5, 2, {{0, 0}, {2, 2}}};
    CHECK_FALSE(nonattacking(diagonal));
    QueensPlacement wrap_diagonal{5, 2, {{0, 0}, {4, 1}}};  // difference (1,-1)
    CHECK_FALSE(nonattacking(wrap_diagonal));
    QueensPlacement ok{5, 2, {{0, 0}, {2, 1}}};
    CHECK(nonattacking(ok));
}

TEST_CASE("queens grid concentration") {
    QueensPlacement q = polya_queens(7);
    Grid g = queens_to_grid(q, 7);
    CHECK(g == parse_grid_file(kDataDir + "/fig5-queens.grid"));
    CHECK(concentration(Word("ABBBBBB"), g) == frac(8, 7));
    CHECK_THROWS_AS(queens_to_grid(q, 6), ShapeError);
}

TEST_CASE("power placement in three dimensions") {
    QueensPlacement q = power_queens(11, 3);
    CHECK(q.positions.size() == 121);
    CHECK(nonattacking(q));
    Grid g = queens_to_grid(q, 11);
    CHECK(concentration(Word("A" + std::string(10, 'B')), g) == frac(26, 11));
    CHECK_THROWS_AS(power_queens(10, 3), GcdError);
    CHECK_THROWS_AS(power_queens(77, 3), GcdError);  // 7 < 2^3 divides 77
}

TEST_CASE("backtracking search") {
    auto found = search_queens(5, 2, 5);
    REQUIRE(found.has_value());
    CHECK(nonattacking(*found));

    // modular queens on n=6: full rank placement impossible
    CHECK_FALSE(search_queens(6, 2, 6).has_value());

    // ell-2 queens exist on the 9x9 modular board
    auto nine = search_queens(9, 2, 7);
    REQUIRE(nine.has_value());
    CHECK(nonattacking(*nine));

    // regression: exhaustive search shows no 3 nonattacking queens mod 4
    CHECK_FALSE(search_queens(4, 2, 3).has_value());

    CHECK_THROWS_AS(search_queens(7, 2, 7, 3), BudgetExceededError);
    CHECK_THROWS_AS(search_queens(5, 3, 5), DomainError);
}

TEST_CASE("figure grid concentrations") {
    const auto& grids = paper_grids();
    CHECK(concentration(Word("ABBB"), grids.at("fig1-left")) == frac(8, 5));
    CHECK(concentration(Word("ABBB"), grids.at("fig1-right")) == frac(3, 2));
    CHECK(concentration(Word("BABBB"), grids.at("lemma67")) == frac(8, 5));
    CHECK(concentration(Word("ABBBBB"), grids.at("fig7-left")) == frac(40, 36));
    CHECK(concentration(Word("ABBBBBBB"), grids.at("fig7-right")) == frac(56, 64));
    CHECK(concentration(Word("ABB"), grids.at("fig9-diag")) == 2);
    CHECK(concentration(Word("ABB"), grids.at("fig9-stack")) == 2);
}

TEST_CASE("embedded grids match the data files") {
    for (const auto& [name, grid] : paper_grids()) {
        CAPTURE(name);
        CHECK(parse_grid_file(kDataDir + "/" + name + ".grid") == grid);
    }
}
