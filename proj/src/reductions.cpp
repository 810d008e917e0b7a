#include "wordgrid/reductions.hpp"

#include <algorithm>
#include <sstream>

#include "wordgrid/analysis.hpp"
#include "wordgrid/count.hpp"
#include "wordgrid/errors.hpp"

namespace wordgrid {

char LetterMap::apply(char c) const {
    auto it = mapping.find(c);
    if (it == mapping.end())
        throw UnmappedLetterError(std::string("letter '") + c + "' is not mapped");
    return it->second;
}

LetterMap parse_letter_map(const std::string& spec, const std::set<char>& source,
                           bool fill_identity) {
    LetterMap pi;
    std::istringstream in(spec);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part.empty())
            continue;
        if (part.size() != 3 || part[1] != ':')
            throw ParseError("letter map entries look like X:Y");
        pi.mapping[part[0]] = part[2];
    }
    if (fill_identity)
        for (char c : source)
            pi.mapping.insert({c, c});
    return pi;
}

Grid apply_map(const LetterMap& pi, const Grid& g) {
    std::string cells = g.cells();
    for (char& c : cells)
        c = pi.apply(c);
    return Grid(g.shape(), cells);
}

ReductionCheck verify_reduction(ReductionCheck rc, long n_max) {
    if (rc.gamma0.dim() != 1)
        throw DimensionMismatchError("reference grid must be one-dimensional");
    if (n_max < rc.gamma0.size())
        throw DomainError("n_max must cover the reference grid");

    Grid pi_gamma0 = apply_map(rc.pi, rc.gamma0);
    long num0 = count(rc.w, rc.gamma0);
    long den0 = count(rc.w_prime, pi_gamma0);
    rc.a_ok = (concentration(rc.w, rc.gamma0) == c1(rc.w));
    rc.b_ok = (concentration(rc.w_prime, pi_gamma0) == c1(rc.w_prime));
    if (den0 != 0)
        rc.ratio_r = frac(num0, den0);

    // (c), bounded: count(w,G) * den0 <= count(w', pi(G)) * num0 for every 1-D
    // grid G over alphabet(w) of size <= n_max
    std::vector<char> letters(rc.w.alphabet().begin(), rc.w.alphabet().end());
    rc.c_ok = true;
    for (long n = 1; n <= n_max && rc.c_ok; ++n) {
        std::string cells(n, letters[0]);
        while (true) {
            Grid g(cells);
            if (count(rc.w, g) * den0 > count(rc.w_prime, apply_map(rc.pi, g)) * num0) {
                rc.c_ok = false;
                break;
            }
            long i = n - 1;
            while (i >= 0 && cells[i] == letters.back())
                cells[i--] = letters[0];
            if (i < 0)
                break;
            cells[i] = letters[std::find(letters.begin(), letters.end(), cells[i]) -
                               letters.begin() + 1];
        }
    }
    rc.c_checked_up_to = n_max;
    return rc;
}

std::optional<std::pair<std::set<char>, std::set<char>>> parity_classes(const Word& w) {
    w.require_nontrivial();
    std::set<char> odd, even;
    for (std::size_t i = 0; i < w.size(); ++i)
        (i % 2 == 0 ? odd : even).insert(w[i]);  // 1-based odd = 0-based even
    for (char c : odd)
        if (even.count(c))
            return std::nullopt;
    return std::make_pair(odd, even);
}

bool is_parity_respecting(const Word& w, const Grid& g) {
    auto classes = parity_classes(w);
    if (!classes || g.dim() != 1)
        return false;
    const std::string& s = g.cells();
    const long n = g.size();
    auto cls = [&](char c) {
        if (classes->first.count(c))
            return 1;
        if (classes->second.count(c))
            return 2;
        return 0;
    };
    for (long i = 0; i < n; ++i) {
        int a = cls(s[i]), b = cls(s[(i + 1) % n]);
        if (a == 0 || b == 0 || a == b)
            return false;
    }
    return true;
}

std::pair<long, long> parity_ratio(const Word& w, const Grid& g) {
    auto classes = parity_classes(w);
    if (!classes)
        throw MixedParityError("word has a letter at both parities");
    LetterMap pi;
    for (char c : classes->first)
        pi.mapping[c] = 'O';
    for (char c : classes->second)
        pi.mapping[c] = 'E';
    for (char c : g.alphabet())
        pi.mapping.insert({c, 'X'});
    return {count(w, g), count(Word("OE"), apply_map(pi, g))};
}

Grid to_parity_respecting(const Word& w, const Grid& g) {
    auto classes = parity_classes(w);
    if (!classes)
        throw MixedParityError("word has a letter at both parities");
    if (g.dim() != 1)
        throw DimensionMismatchError("parity transformation needs a 1-D grid");

    const Grid fallback(std::string{w[0], w[1]});

    // step 1: repeatedly drop cells in no appearance of w
    std::string s = g.cells();
    while (!s.empty()) {
        Grid cur(s);
        std::vector<char> used(s.size(), 0);
        const long n = cur.size();
        for (long p = 0; p < n; ++p) {
            for (int dir : {1, -1}) {
                bool hit = true;
                for (std::size_t i = 0; i < w.size(); ++i)
                    if (s[mod(p + dir * static_cast<long>(i), n)] != w[i]) {
                        hit = false;
                        break;
                    }
                if (hit)
                    for (std::size_t i = 0; i < w.size(); ++i)
                        used[mod(p + dir * static_cast<long>(i), n)] = 1;
            }
        }
        std::string kept;
        for (long i = 0; i < n; ++i)
            if (used[i])
                kept += s[i];
        if (kept.size() == s.size())
            break;
        s = kept;
    }
    if (s.empty())
        return fallback;

    // step 2: collapse doubled first/last letters of w
    bool changed = true;
    while (changed && s.size() > 1) {
        changed = false;
        const long n = static_cast<long>(s.size());
        for (long i = 0; i < n; ++i) {
            char a = s[i], b = s[(i + 1) % n];
            if (a == b && (a == w[0] || a == w[w.size() - 1])) {
                s.erase(s.begin() + (i + 1) % n);
                changed = true;
                break;
            }
        }
    }
    if (is_parity_respecting(w, Grid(s)))
        return Grid(s);

    // step 3: cut at the remaining parity violations and double the best
    // segment t into t . reverse(interior of t)
    auto cls = [&](char c) {
        return classes->first.count(c) ? 1 : classes->second.count(c) ? 2 : 0;
    };
    const long n = static_cast<long>(s.size());
    std::vector<long> cuts;  // violation between position i and i+1
    for (long i = 0; i < n; ++i)
        if (cls(s[i]) == cls(s[(i + 1) % n]) || cls(s[i]) == 0)
            cuts.push_back(i);
    if (cuts.empty())
        return fallback;  // odd cycle with no 2-coloring violation cannot happen

    std::optional<Grid> best;
    std::pair<long, long> best_f{0, 1};
    for (std::size_t c = 0; c < cuts.size(); ++c) {
        long begin = mod(cuts[c] + 1, n);
        long end = cuts[(c + 1) % cuts.size()];  // inclusive
        std::string t;
        for (long i = begin; ; i = mod(i + 1, n)) {
            t += s[i];
            if (i == end)
                break;
        }
        if (t.size() < 2)
            continue;
        std::string doubled = t + std::string(t.rbegin() + 1, t.rend() - 1);
        Grid cand(doubled);
        if (!is_parity_respecting(w, cand))
            continue;
        auto f = parity_ratio(w, cand);
        // compare f > best_f by cross-multiplication; ties keep the first
        if (!best || f.first * best_f.second > best_f.first * f.second) {
            best = cand;
            best_f = f;
        }
    }
    return best ? *best : fallback;
}

Word repeat_word(const Word& w, int k) {
    if (k < 1)
        throw DomainError("repetition count must be >= 1");
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i)
        out.append(k, w[i]);
    return Word(out);
}

bool check_repetition_inequality(const Word& w, int k, const Grid& g) {
    if (k < 1)
        throw DomainError("repetition count must be >= 1");
    for (long e : g.shape().extents)
        if (e % k != 0)
            throw ShapeError("every extent must be divisible by k");

    long lhs = static_cast<long>(k) * count(repeat_word(w, k), g);

    const int d = g.dim();
    std::vector<long> sub_ext = g.shape().extents;
    for (long& e : sub_ext)
        e /= k;
    Shape sub_shape{sub_ext};

    long rhs = 0;
    Point v(d, 0);
    while (true) {
        std::string cells(sub_shape.size(), '?');
        for (long idx = 0; idx < sub_shape.size(); ++idx) {
            Point y = point_at(sub_shape, idx);
            Point x(d);
            for (int c = 0; c < d; ++c)
                x[c] = k * y[c] + v[c];
            cells[idx] = g.at(x);
        }
        rhs += count(w, Grid(sub_shape, cells));
        int i = d - 1;
        while (i >= 0 && v[i] == k - 1)
            v[i--] = 0;
        if (i < 0)
            break;
        ++v[i];
    }
    return lhs <= rhs;
}

}  // namespace wordgrid
