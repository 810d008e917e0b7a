#pragma once

#include <vector>

#include "wordgrid/grid.hpp"

namespace wordgrid {

// An element of the hyperoctahedral group (Z/2)^d x| S_d acting on Z^d:
// (g x)_i = sign[i] * x[perm[i]].
struct SignedPerm {
    std::vector<int> perm;
    std::vector<int> sign;  // +1 / -1

    Point apply(const Point& x) const;
};

// All 2^d * d! signed permutations, deterministic order.
std::vector<SignedPerm> hyperoctahedral_group(int d);

// An affine lattice symmetry x -> g x + t.
struct AffineSym {
    SignedPerm g;
    Point t;

    Point apply(const Point& x) const;
    Point apply_dir(const Point& v) const { return g.apply(v); }
};

// The symmetries x -> g x + t mapping the finite point set S onto itself.
// For each g there is at most one viable t (bounding boxes must align).
std::vector<AffineSym> window_stabilizer(const std::vector<Point>& S);

}  // namespace wordgrid
