#include "wordgrid/analysis.hpp"

#include <algorithm>
#include <set>

#include "wordgrid/count.hpp"
#include "wordgrid/errors.hpp"

namespace wordgrid {

Rational c1(const Word& w) {
    WordProfile p = profile(w);
    if (p.is_palindrome)
        return frac(2, p.ell - p.c_repeat);
    return std::max(frac(1, p.ell - p.c_repeat),
                    frac(2, 2 * p.ell - p.c_left - p.c_right));
}

Grid construct_rep(const Word& w) {
    WordProfile p = profile(w);
    return Grid(w.letters().substr(0, p.ell - p.c_repeat));
}

Grid construct_pal(const Word& w) {
    WordProfile p = profile(w);
    std::string u2 = w.letters().substr(0, p.ell - p.c_right);
    std::string u1 = w.letters().substr(p.c_left);
    std::reverse(u1.begin(), u1.end());
    return Grid(u2 + u1);
}

namespace {

std::string reversed_str(std::string s) {
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace

ExtremalClass classify_extremal(const Word& w) {
    WordProfile p = profile(w);
    if (p.is_palindrome || p.c_left + p.c_right < 2 * p.c_repeat)
        return ExtremalClass{ExtremalKind::RepOnly, w, "", "", "", "", "", false};
    if (p.c_left + p.c_right > 2 * p.c_repeat)
        return ExtremalClass{ExtremalKind::PalOnly, w, "", "", "", "", "", false};

    // Mixed: both constructions have the same size ell - c_repeat. Normalize
    // to c_left <= c_right by reversing if needed.
    bool rev = p.c_left > p.c_right;
    Word u = rev ? reverse(w) : w;
    WordProfile q = profile(u);
    std::string v = u.letters().substr(0, q.ell - q.c_repeat);
    std::string x = v.substr(0, q.c_left);
    std::string y = v.substr(q.c_left, q.c_repeat - q.c_left);
    std::string z = v.substr(q.c_repeat, v.size() - q.c_repeat - y.size());
    std::string v_prime = x + y + reversed_str(z) + reversed_str(y);
    if (rev)
        return ExtremalClass{ExtremalKind::Mixed, w,
                             reversed_str(v), reversed_str(v_prime),
                             x, y, z, true};
    return ExtremalClass{ExtremalKind::Mixed, w, v, v_prime, x, y, z, false};
}

std::vector<Grid> ExtremalClass::extremal_grids(int m) const {
    if (kind == ExtremalKind::RepOnly)
        return {construct_rep(word)};
    if (kind == ExtremalKind::PalOnly)
        return {construct_pal(word)};
    std::set<std::string> seen;
    std::vector<Grid> out;
    for (long mask = 0; mask < (1L << m); ++mask) {
        std::string cells;
        for (int i = 0; i < m; ++i)
            cells += (mask >> i & 1) ? v_prime : v;
        if (seen.insert(cells).second)
            out.push_back(Grid(cells));
    }
    return out;
}

LetterDistribution canonical_distribution(const Word& w) {
    ExtremalClass cls = classify_extremal(w);
    return letter_distribution(cls.extremal_grids(1).front());
}

StabilityReport stability_gap(const Word& w, const Grid& g) {
    w.require_nontrivial();
    if (g.dim() != 1)
        throw DimensionMismatchError("stability gap needs a 1-D grid");
    Rational cap = c1(w);
    Rational delta = 1 - concentration(w, g) / cap;
    Rational tv = total_variation(letter_distribution(g), canonical_distribution(w));
    return StabilityReport{delta, tv, tv <= delta};
}

}  // namespace wordgrid
