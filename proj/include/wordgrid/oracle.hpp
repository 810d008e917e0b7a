#pragma once

#include <vector>

#include "wordgrid/count.hpp"
#include "wordgrid/grid.hpp"
#include "wordgrid/word.hpp"

namespace wordgrid {

struct OracleOptions {
    long node_budget = -1;          // -1: unlimited
    bool branch_and_bound = true;   // admissible pruning; exact either way
    int witness_cap = 8;
};

struct OracleResult {
    Rational best = 0;
    std::vector<Grid> witnesses;
    std::vector<Shape> shapes_searched;
    long nodes = 0;
    // false when the node budget ran out; best is then only a lower bound
    bool complete = true;
};

// Exact maximum of concentration(w, .) over every grid of the given shape
// with letters drawn from alphabet(w).
OracleResult max_concentration(const Word& w, const Shape& shape,
                               const OracleOptions& opt = {});

// True iff the oracle maximum over 1-D sizes n <= n_max equals c1(w) and the
// maximum is attained at some n <= 2*ell - 2 or at n = ell - c_repeat.
bool verify_c1(const Word& w, long n_max, const OracleOptions& opt = {});

struct Lemma72Report {
    Rational lhs, rhs;
    bool holds;
};

// E_{x,y} f(x)(1-f(x+y))(1-f(x+2y)) <= (3/2) a (1-a)^2 on (Z/3)^d, a = mean f.
// f is given row-major over (Z/3)^d with values in [0,1].
Lemma72Report lemma72_check(int d, const std::vector<Rational>& f);

struct SpreadReport {
    long max_diff;
    double bound;
    bool holds;
};

// On a cubic grid (n,...,n) with n < 2^d: the counts of letter a over the
// search lines spread by at least sqrt(min(alpha,1-alpha)) * n / 3^(d/2).
// The comparison is done exactly (both sides squared).
SpreadReport searchline_spread(const Grid& g, char a);

}  // namespace wordgrid
