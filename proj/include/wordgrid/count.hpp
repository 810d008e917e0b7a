#pragma once

#include <map>
#include <vector>

#include "wordgrid/grid.hpp"
#include "wordgrid/word.hpp"

namespace wordgrid {

// All 3^d - 1 nonzero vectors in {-1,0,1}^d, in a fixed deterministic order.
std::vector<Point> directions(int d);

// Number of nonzero components ("weight class" j, 1 <= j <= d).
int weight_class(const Point& v);

// Number of direction vectors in weight class j: 2^j * C(d, j).
long class_size(int d, int j);

// Number of (position, direction) pairs spelling w, with wraparound: the word
// may wind several times around a short cycle.
long count(const Word& w, const Grid& g);

std::map<int, long> count_by_class(const Word& w, const Grid& g);

Rational concentration(const Word& w, const Grid& g);

struct SearchLine {
    Grid line;
    Point base;
    Point dir;
    long period;
};

// One representative per equivalence class of lines (orbit of the start point,
// direction up to sign). Counting any word over the returned lines is in
// bijection with counting it in the grid.
std::vector<SearchLine> search_lines(const Grid& g);

}  // namespace wordgrid
