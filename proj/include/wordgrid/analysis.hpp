#pragma once

#include <string>
#include <vector>

#include "wordgrid/grid.hpp"
#include "wordgrid/word.hpp"

namespace wordgrid {

// The exact 1-D optimum C_1(w): for non-palindromes the larger of
// 1/(ell - c_repeat) and 2/(2*ell - c_left - c_right); for palindromes
// 2/(ell - c_repeat).
Rational c1(const Word& w);

// Cyclic grid on the first ell - c_repeat letters; its concentration attains
// 1/(ell - c_repeat), doubled for palindromes.
Grid construct_rep(const Word& w);

// Cyclic grid on u2 * reverse(u1), where w = p_left u1 = u2 p_right; size
// 2*ell - c_left - c_right, concentration 2/(2*ell - c_left - c_right).
Grid construct_pal(const Word& w);

enum class ExtremalKind { RepOnly, PalOnly, Mixed };

// Which of the two constructions produce 1-D extremal grids, and in the Mixed
// case the pair of building blocks v, v_prime (v = x y z rev(y),
// v_prime = x y rev(z) rev(y)): every concatenation Grid(v_1 ... v_m) with
// v_i in {v, v_prime} is extremal. When c_left > c_right the reversed word is
// analyzed and v, v_prime are reversed back; x, y, z refer to the normalized
// (possibly reversed) word.
struct ExtremalClass {
    ExtremalKind kind;
    Word word;
    std::string v, v_prime;
    std::string x, y, z;
    bool reversed = false;

    // Mixed: all distinct Grid(v_1 ... v_m) concatenations. Otherwise the
    // single construction grid.
    std::vector<Grid> extremal_grids(int m) const;
};

ExtremalClass classify_extremal(const Word& w);

// Letter distribution shared by every 1-D extremal grid of w.
LetterDistribution canonical_distribution(const Word& w);

struct StabilityReport {
    Rational delta;  // c_1(w, g) = C_1(w) * (1 - delta)
    Rational tv;     // total variation distance between h_g and h_w
    bool holds;      // tv <= delta
};

StabilityReport stability_gap(const Word& w, const Grid& g);

}  // namespace wordgrid
