#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wordgrid/grid.hpp"

namespace wordgrid {

struct QueensPlacement {
    long n;
    int d;
    std::vector<Point> positions;
};

// No difference of two positions is a scalar multiple (mod n) of a vector in
// {-1,0,1}^d. Checked pairwise by brute force; independent of the generators.
bool nonattacking(const QueensPlacement& q);

// n queens at (i, 2i mod n); requires gcd(n, 6) = 1.
QueensPlacement polya_queens(long n);

// n^(d-1) queens at (sum_{i=1}^{d-1} 2^i a_i, a_1, ..., a_{d-1});
// requires gcd(n, (2^d)!) = 1.
QueensPlacement power_queens(long n, int d);

// Letter A at the queens, B elsewhere; the board size must equal ell so the
// word A B^(ell-1) winds exactly once per direction.
Grid queens_to_grid(const QueensPlacement& q, long ell);

// Backtracking search for `target` nonattacking queens on the modular n x n
// board; deterministic lexicographic order.
std::optional<QueensPlacement> search_queens(long n, int d, int target,
                                             long node_budget = 50000000);

// The figure grids, keyed fig1-left, fig1-right, fig7-left, fig7-right,
// lemma67, fig9-diag, fig9-stack.
const std::map<std::string, Grid>& paper_grids();

}  // namespace wordgrid
