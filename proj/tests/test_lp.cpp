#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wordgrid/certificate.hpp"
#include "wordgrid/errors.hpp"
#include "wordgrid/lp.hpp"

using namespace wordgrid;

static std::vector<Point> box(std::vector<long> ext) {
    std::vector<Point> window;
    Point p(ext.size(), 0);
    while (true) {
        window.push_back(p);
        int i = static_cast<int>(ext.size()) - 1;
        while (i >= 0 && p[i] == ext[i] - 1)
            p[i--] = 0;
        if (i < 0)
            break;
        ++p[i];
    }
    return window;
}

TEST_CASE("simplex on hand-solvable programs") {
    // min -x - y st x + y = 1 -> -1
    SimplexResult r = simplex_solve({{1, 1}}, {1}, {-1, -1});
    CHECK(r.value == -1);

    // min x st x - s = 3 (x >= 3)
    r = simplex_solve({{1, -1}}, {3}, {1, 0});
    CHECK(r.value == 3);
    CHECK(r.x[0] == 3);

    // exactness: fractional optimum
    r = simplex_solve({{2, 1, 1, 0}, {1, 3, 0, 1}}, {1, 1},
                      {-1, -1, 0, 0});
    CHECK(r.value == frac(-3, 5));

    CHECK_THROWS_AS(simplex_solve({{1, 1}}, {-1}, {1, 1}), Error);  // infeasible
    CHECK_THROWS_AS(simplex_solve({{0, 0}}, {0}, {-1, -1}), Error);  // unbounded
}

TEST_CASE("program construction collapses orbits") {
    LinearProgram lp = build_lp(Word("ABB"), 2, box({3, 3}), 'B');
    CHECK(lp.raw_support == 72);
    CHECK(lp.raw_constraints == 512);
    CHECK(lp.orbits.size() < static_cast<std::size_t>(lp.raw_support));
    CHECK(lp.grid_rows.size() < static_cast<std::size_t>(lp.raw_constraints));
    // every orbit member count splits the raw support exactly
    long members = 0;
    for (const auto& orbit : lp.orbits)
        members += static_cast<long>(orbit.size());
    CHECK(members == lp.raw_support);
}

TEST_CASE("optimal bounds reproduce the certified values") {
    LpSolution abb = solve_lp(build_lp(Word("ABB"), 2, box({3, 3}), 'B'), 42);
    CHECK(abb.optimum == 2);

    LpSolution ab2 = solve_lp(build_lp(Word("AB"), 2, box({2, 2}), 'B'), 42);
    CHECK(ab2.optimum == 3);

    LpSolution ab1 = solve_lp(build_lp(Word("AB"), 1, box({2}), 'B'), 42);
    CHECK(ab1.optimum == 1);
}

TEST_CASE("emitted certificates re-verify independently") {
    for (auto& [word, window, expect] :
         std::vector<std::tuple<std::string, std::vector<long>, Rational>>{
             {"ABB", {3, 3}, 2}, {"AB", {2, 2}, 3}}) {
        LpSolution sol =
            solve_lp(build_lp(Word(word), 2, box(window), 'B'), 7);
        CHECK(sol.optimum == expect);
        CHECK(sol.cert.K == 1);
        CHECK(sol.cert.M == expect);
        CHECK(check_condition_i(sol.cert).ok);
        CHECK(certified_bound(sol.cert, EnumStrategy::FullEnum).value == expect);
    }
}

TEST_CASE("seeded runs are deterministic, different seeds agree on the value") {
    LinearProgram lp = build_lp(Word("ABB"), 2, box({3, 3}), 'B');
    LpSolution a = solve_lp(lp, 1);
    LpSolution b = solve_lp(lp, 1);
    CHECK(format_certificate(a.cert) == format_certificate(b.cert));
    for (std::uint64_t seed : {2ULL, 99ULL, 123456789ULL})
        CHECK(solve_lp(lp, seed).optimum == a.optimum);
}

TEST_CASE("degenerate windows are rejected") {
    CHECK_THROWS_AS(build_lp(Word("ABB"), 2, {}, 'B'), Error);
}
