#include "wordgrid/count.hpp"

#include <numeric>

#include "wordgrid/errors.hpp"

namespace wordgrid {

std::vector<Point> directions(int d) {
    std::vector<Point> out;
    Point v(d, -1);
    while (true) {
        bool zero = true;
        for (long c : v)
            if (c != 0)
                zero = false;
        if (!zero)
            out.push_back(v);
        int i = d - 1;
        while (i >= 0 && v[i] == 1)
            v[i--] = -1;
        if (i < 0)
            break;
        ++v[i];
    }
    return out;
}

int weight_class(const Point& v) {
    int j = 0;
    for (long c : v)
        if (c != 0)
            ++j;
    return j;
}

long class_size(int d, int j) {
    long binom = 1;
    for (int i = 1; i <= j; ++i)
        binom = binom * (d - i + 1) / i;
    return binom << j;
}

namespace {

bool spells(const Word& w, const Grid& g, Point p, const Point& v) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (g.at(p) != w[i])
            return false;
        for (int c = 0; c < g.dim(); ++c)
            p[c] += v[c];
    }
    return true;
}

}  // namespace

long count(const Word& w, const Grid& g) {
    long total = 0;
    for (auto& [j, n] : count_by_class(w, g))
        total += n;
    return total;
}

std::map<int, long> count_by_class(const Word& w, const Grid& g) {
    w.require_nontrivial();
    std::map<int, long> by_class;
    for (int j = 1; j <= g.dim(); ++j)
        by_class[j] = 0;
    for (const Point& v : directions(g.dim())) {
        long n = 0;
        for (long idx = 0; idx < g.size(); ++idx)
            if (spells(w, g, g.point_at(idx), v))
                ++n;
        by_class[weight_class(v)] += n;
    }
    return by_class;
}

Rational concentration(const Word& w, const Grid& g) {
    return frac(count(w, g), g.size());
}

std::vector<SearchLine> search_lines(const Grid& g) {
    const int d = g.dim();
    std::vector<SearchLine> lines;
    for (const Point& v : directions(d)) {
        // one direction per {v, -v} pair: keep the one whose first nonzero
        // component is positive
        bool canonical = false;
        for (long c : v) {
            if (c != 0) {
                canonical = (c > 0);
                break;
            }
        }
        if (!canonical)
            continue;

        long period = 1;
        for (int i = 0; i < d; ++i)
            if (v[i] != 0)
                period = std::lcm(period, g.shape().extents[i]);

        std::vector<bool> visited(g.size(), false);
        for (long idx = 0; idx < g.size(); ++idx) {
            if (visited[idx])
                continue;
            Point p = g.point_at(idx);
            std::string letters;
            letters.reserve(period);
            Point q = p;
            for (long t = 0; t < period; ++t) {
                visited[g.index(q)] = true;
                letters += g.at(q);
                for (int c = 0; c < d; ++c)
                    q[c] += v[c];
            }
            lines.push_back(SearchLine{Grid(letters), p, v, period});
        }
    }
    return lines;
}

}  // namespace wordgrid
