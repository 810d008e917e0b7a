#include "wordgrid/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wordgrid {

Point SignedPerm::apply(const Point& x) const {
    Point y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        y[i] = sign[i] * x[perm[i]];
    return y;
}

std::vector<SignedPerm> hyperoctahedral_group(int d) {
    std::vector<SignedPerm> out;
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (long mask = 0; mask < (1L << d); ++mask) {
            std::vector<int> sign(d);
            for (int i = 0; i < d; ++i)
                sign[i] = (mask >> i & 1) ? -1 : 1;
            out.push_back(SignedPerm{perm, sign});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Point AffineSym::apply(const Point& x) const {
    Point y = g.apply(x);
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] += t[i];
    return y;
}

std::vector<AffineSym> window_stabilizer(const std::vector<Point>& S) {
    const int d = static_cast<int>(S.front().size());
    std::set<Point> members(S.begin(), S.end());

    Point lo = S.front();
    for (const Point& p : S)
        for (int i = 0; i < d; ++i)
            lo[i] = std::min(lo[i], p[i]);

    std::vector<AffineSym> out;
    for (const SignedPerm& g : hyperoctahedral_group(d)) {
        Point glo = g.apply(S.front());
        for (const Point& p : S) {
            Point q = g.apply(p);
            for (int i = 0; i < d; ++i)
                glo[i] = std::min(glo[i], q[i]);
        }
        Point t(d);
        for (int i = 0; i < d; ++i)
            t[i] = lo[i] - glo[i];
        AffineSym sym{g, t};
        bool stabilizes = true;
        for (const Point& p : S) {
            if (!members.count(sym.apply(p))) {
                stabilizes = false;
                break;
            }
        }
        if (stabilizes)
            out.push_back(sym);
    }
    return out;
}

}  // namespace wordgrid
