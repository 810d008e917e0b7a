#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>

#include "wordgrid/grid.hpp"
#include "wordgrid/word.hpp"

namespace wordgrid {

struct LetterMap {
    std::map<char, char> mapping;  // identity where absent is NOT implied

    char apply(char c) const;
};

LetterMap parse_letter_map(const std::string& spec, const std::set<char>& source,
                           bool fill_identity = true);

Grid apply_map(const LetterMap& pi, const Grid& g);

// Projection reduction w -> w' via pi with reference grid gamma0:
// (a) gamma0 is w-extremal, (b) pi(gamma0) is w'-extremal, and (c) the count
// ratio count(w, .) / count(w', pi(.)) is maximized by gamma0 among all 1-D
// grids up to size n_max. Condition (c) over ALL grids is what the reduction
// needs; only the bounded check is performed here.
struct ReductionCheck {
    Word w, w_prime;
    LetterMap pi;
    Grid gamma0;
    Rational ratio_r = 0;
    bool a_ok = false, b_ok = false, c_ok = false;
    long c_checked_up_to = 0;
};

ReductionCheck verify_reduction(ReductionCheck rc, long n_max);

// The (odd-position letters, even-position letters) bipartition, or nullopt
// when some letter appears at both parities.
std::optional<std::pair<std::set<char>, std::set<char>>> parity_classes(const Word& w);

bool is_parity_respecting(const Word& w, const Grid& g);

// Ratio f(g) = count(w, g) / count(OE, pi(g)) with pi collapsing the parity
// classes to two letters; 0 when the denominator vanishes.
std::pair<long, long> parity_ratio(const Word& w, const Grid& g);

// Rewrites a 1-D grid into a parity-respecting one without decreasing f:
// delete letters in no appearance, collapse doubled end letters, and for odd
// word length keep the best doubled segment.
Grid to_parity_respecting(const Word& w, const Grid& g);

Word repeat_word(const Word& w, int k);

// k * count(w^(k), g) <= sum over the k^d subsampled grids of count(w, .).
bool check_repetition_inequality(const Word& w, int k, const Grid& g);

}  // namespace wordgrid
