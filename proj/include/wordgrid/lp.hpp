#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wordgrid/certificate.hpp"
#include "wordgrid/grid.hpp"
#include "wordgrid/word.hpp"

namespace wordgrid {

// min c.x subject to A x = b, x >= 0. Exact rational two-phase simplex with
// Bland's anti-cycling rule.
struct SimplexResult {
    Rational value;
    std::vector<Rational> x;
};

SimplexResult simplex_solve(std::vector<std::vector<Rational>> A,
                            std::vector<Rational> b,
                            const std::vector<Rational>& c);

// The bound-search program for a word in dimension d over a finite window S
// with letter A fixed outside S: variables are the stabilizer orbits of the
// admissible (position, direction) pairs plus the bound M1; one constraint
// per orbit of window assignments; normalization K = 1 per direction class.
struct LinearProgram {
    Word word;
    int dim;
    std::vector<Point> window;
    char fixed_letter;

    std::vector<std::vector<std::pair<Point, Point>>> orbits;
    std::vector<int> orbit_class;  // direction weight class, constant per orbit

    // condition (i): for each class j, sum over orbits of that class of
    // |orbit| * x / |V_j| equals 1
    // grid constraints: per collapsed assignment, matching-member counts
    std::vector<std::vector<long>> grid_rows;

    long raw_support = 0;      // |F| before orbit collapsing
    long raw_constraints = 0;  // assignments before collapsing
};

LinearProgram build_lp(const Word& w, int d, const std::vector<Point>& S,
                       char fixed_letter);

struct LpSolution {
    Rational optimum;
    WeightCertificate cert;  // K = 1, M = optimum
    int rounds = 0;
    long active_constraints = 0;
};

// Iterative violated-constraint solving: sample a few constraint rows, solve
// exactly, add every violated row, repeat until the solution satisfies the
// whole program. Deterministic for a fixed seed.
LpSolution solve_lp(const LinearProgram& lp, std::uint64_t seed);

}  // namespace wordgrid
