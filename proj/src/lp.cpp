#include "wordgrid/lp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "wordgrid/count.hpp"
#include "wordgrid/errors.hpp"
#include "wordgrid/symmetry.hpp"

namespace wordgrid {

namespace {

// Bland's rule: entering variable with the smallest index among negative
// reduced costs; leaving row by minimum ratio, ties broken by smallest basic
// variable index. Guarantees termination without perturbation.
struct Tableau {
    int m, n;  // rows, structural columns
    std::vector<std::vector<Rational>> rows;  // m x (n+1), last column rhs
    std::vector<Rational> cost;               // n+1 reduced costs, last = -objective
    std::vector<int> basis;

    void pivot(int r, int c) {
        Rational inv = 1 / rows[r][c];
        for (Rational& q : rows[r])
            q *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            Rational f = rows[i][c];
            for (int j = 0; j <= n; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        if (cost[c] != 0) {
            Rational f = cost[c];
            for (int j = 0; j <= n; ++j)
                cost[j] -= f * rows[r][j];
        }
        basis[r] = c;
    }

    // Runs to optimality; allowed[j] marks columns eligible to enter.
    void optimize(const std::vector<char>& allowed) {
        while (true) {
            int enter = -1;
            for (int j = 0; j < n; ++j) {
                if (allowed[j] && cost[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0)
                return;
            int leave = -1;
            Rational best_ratio = 0;
            for (int i = 0; i < m; ++i) {
                if (rows[i][enter] <= 0)
                    continue;
                Rational ratio = rows[i][n] / rows[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0)
                throw Error("linear program is unbounded");
            pivot(leave, enter);
        }
    }
};

}  // namespace

SimplexResult simplex_solve(std::vector<std::vector<Rational>> A,
                            std::vector<Rational> b,
                            const std::vector<Rational>& c) {
    const int m = static_cast<int>(A.size());
    const int n = m ? static_cast<int>(A[0].size()) : static_cast<int>(c.size());

    for (int i = 0; i < m; ++i) {
        if (b[i] < 0) {
            for (Rational& q : A[i])
                q = -q;
            b[i] = -b[i];
        }
    }

    // phase 1: artificial basis, minimize the sum of artificials
    Tableau t;
    t.m = m;
    t.n = n + m;
    t.rows.assign(m, std::vector<Rational>(t.n + 1, 0));
    t.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j)
            t.rows[i][j] = A[i][j];
        t.rows[i][n + i] = 1;
        t.rows[i][t.n] = b[i];
        t.basis[i] = n + i;
    }
    t.cost.assign(t.n + 1, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= t.n; ++j)
            if (j < n || j == t.n)
                t.cost[j] -= t.rows[i][j];
    std::vector<char> allowed(t.n, 1);
    t.optimize(allowed);
    if (-t.cost[t.n] != 0)
        throw Error("linear program is infeasible");

    // drive leftover artificials out of the basis (their value is zero)
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] < n)
            continue;
        int c2 = -1;
        for (int j = 0; j < n; ++j)
            if (t.rows[i][j] != 0) {
                c2 = j;
                break;
            }
        if (c2 >= 0)
            t.pivot(i, c2);
        // else: redundant row; harmless to keep with an artificial at zero
    }

    // phase 2: real objective; artificial columns barred from entering
    t.cost.assign(t.n + 1, 0);
    for (int j = 0; j < n; ++j)
        t.cost[j] = c[j];
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] < n && c[t.basis[i]] != 0) {
            Rational f = c[t.basis[i]];
            for (int j = 0; j <= t.n; ++j)
                t.cost[j] -= f * t.rows[i][j];
        }
    }
    for (int j = n; j < t.n; ++j)
        allowed[j] = 0;
    t.optimize(allowed);

    SimplexResult res;
    res.x.assign(n, 0);
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < n)
            res.x[t.basis[i]] = t.rows[i][t.n];
    res.value = 0;
    for (int j = 0; j < n; ++j)
        res.value += c[j] * res.x[j];
    return res;
}

LinearProgram build_lp(const Word& w, int d, const std::vector<Point>& S,
                       char fixed_letter) {
    w.require_nontrivial();
    if (!w.alphabet().count(fixed_letter))
        throw DomainError("fixed letter must occur in the word");
    if (S.empty())
        throw EmptySupportError("empty window");
    for (const Point& p : S)
        if (static_cast<int>(p.size()) != d)
            throw DimensionMismatchError("window point dimension mismatch");

    std::set<Point> window_set(S.begin(), S.end());
    std::vector<int> hard;  // indices where the word letter is not the fixed one
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
        if (w[i] != fixed_letter)
            hard.push_back(i);

    // admissible pairs: every hard index must land inside the window
    std::set<std::pair<Point, Point>> support;
    for (const Point& v : directions(d)) {
        for (const Point& s : S) {
            Point p(d);
            for (int c = 0; c < d; ++c)
                p[c] = s[c] - hard.front() * v[c];
            bool ok = true;
            for (int i : hard) {
                Point q(d);
                for (int c = 0; c < d; ++c)
                    q[c] = p[c] + i * v[c];
                if (!window_set.count(q)) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                support.insert({p, v});
        }
    }
    if (support.empty())
        throw EmptySupportError("no admissible (position, direction) pairs");

    LinearProgram lp{w, d, S, fixed_letter, {}, {}, {}, 0, 0};
    lp.raw_support = static_cast<long>(support.size());

    std::vector<AffineSym> stab = window_stabilizer(S);
    std::map<std::pair<Point, Point>, int> orbit_of;
    for (const auto& pair : support) {
        if (orbit_of.count(pair))
            continue;
        int id = static_cast<int>(lp.orbits.size());
        std::set<std::pair<Point, Point>> members;
        for (const AffineSym& g : stab)
            members.insert({g.apply(pair.first), g.apply_dir(pair.second)});
        lp.orbits.emplace_back(members.begin(), members.end());
        lp.orbit_class.push_back(weight_class(pair.second));
        for (const auto& mem : members) {
            if (!support.count(mem))
                throw Error("stabilizer does not preserve the support");
            orbit_of[mem] = id;
        }
    }

    // per support member: requirements on window cells
    std::map<Point, int> cell_index;
    for (int i = 0; i < static_cast<int>(S.size()); ++i)
        cell_index[S[i]] = i;
    struct Member {
        int orbit;
        std::vector<std::pair<int, char>> reqs;
    };
    std::vector<Member> members;
    for (const auto& [p, v] : support) {
        Member mem;
        mem.orbit = orbit_of[{p, v}];
        Point q = p;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (auto it = cell_index.find(q); it != cell_index.end())
                mem.reqs.push_back({it->second, w[i]});
            for (int c = 0; c < d; ++c)
                q[c] += v[c];
        }
        members.push_back(std::move(mem));
    }

    // one constraint per stabilizer orbit of window assignments
    std::vector<char> letters(w.alphabet().begin(), w.alphabet().end());
    const int cells = static_cast<int>(S.size());
    double total = std::pow(static_cast<double>(letters.size()), cells);
    if (total > 2e6)
        throw BudgetExceededError("window assignment space too large");
    lp.raw_constraints = static_cast<long>(total + 0.5);

    // how each stabilizer element permutes the window cells
    std::vector<std::vector<int>> cell_perm;
    for (const AffineSym& g : stab) {
        std::vector<int> perm(cells);
        for (int i = 0; i < cells; ++i)
            perm[cell_index[g.apply(S[i])]] = i;
        cell_perm.push_back(perm);
    }

    std::string assign(cells, letters[0]);
    std::string image(cells, letters[0]);
    while (true) {
        bool canonical = true;
        for (const auto& perm : cell_perm) {
            for (int i = 0; i < cells; ++i)
                image[i] = assign[perm[i]];
            if (image < assign) {
                canonical = false;
                break;
            }
        }
        if (canonical) {
            std::vector<long> row(lp.orbits.size(), 0);
            for (const Member& mem : members) {
                bool match = true;
                for (auto [cell, letter] : mem.reqs)
                    if (assign[cell] != letter) {
                        match = false;
                        break;
                    }
                if (match)
                    ++row[mem.orbit];
            }
            lp.grid_rows.push_back(std::move(row));
        }
        int i = cells - 1;
        while (i >= 0 && assign[i] == letters.back()) {
            assign[i] = letters[0];
            --i;
        }
        if (i < 0)
            break;
        assign[i] = letters[std::find(letters.begin(), letters.end(), assign[i]) -
                            letters.begin() + 1];
    }
    return lp;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, std::uint64_t seed) {
    const int k = static_cast<int>(lp.orbits.size());
    const int d = lp.dim;
    const long R = static_cast<long>(lp.grid_rows.size());

    std::vector<long> order(R);
    for (long i = 0; i < R; ++i)
        order[i] = i;
    std::uint64_t state = seed;
    for (long i = R - 1; i > 0; --i)
        std::swap(order[i], order[splitmix64(state) % (i + 1)]);

    std::vector<long> active(order.begin(), order.begin() + std::min<long>(64, R));
    std::vector<char> in_active(R, 0);
    for (long r : active)
        in_active[r] = 1;

    SimplexResult sol;
    int rounds = 0;
    while (true) {
        ++rounds;
        const int slacks = static_cast<int>(active.size());
        const int n = k + 1 + slacks;  // orbit weights, M1, slack per row
        std::vector<std::vector<Rational>> A;
        std::vector<Rational> b;
        for (int j = 1; j <= d; ++j) {
            std::vector<Rational> row(n, 0);
            for (int i = 0; i < k; ++i)
                if (lp.orbit_class[i] == j)
                    row[i] = frac(static_cast<long>(lp.orbits[i].size()),
                                  class_size(d, j));
            A.push_back(row);
            b.push_back(1);
        }
        for (int r = 0; r < slacks; ++r) {
            std::vector<Rational> row(n, 0);
            for (int i = 0; i < k; ++i)
                row[i] = lp.grid_rows[active[r]][i];
            row[k] = -1;
            row[k + 1 + r] = 1;
            A.push_back(row);
            b.push_back(0);
        }
        std::vector<Rational> c(n, 0);
        c[k] = 1;
        sol = simplex_solve(std::move(A), std::move(b), c);

        std::vector<long> violated;
        for (long r = 0; r < R; ++r) {
            if (in_active[r])
                continue;
            Rational lhs = 0;
            for (int i = 0; i < k; ++i)
                if (lp.grid_rows[r][i])
                    lhs += Rational(lp.grid_rows[r][i]) * sol.x[i];
            if (lhs > sol.x[k])
                violated.push_back(r);
        }
        if (violated.empty())
            break;
        for (long r : violated) {
            active.push_back(r);
            in_active[r] = 1;
        }
    }

    std::vector<CertEntry> entries;
    for (int i = 0; i < k; ++i) {
        if (sol.x[i] == 0)
            continue;
        for (const auto& [p, v] : lp.orbits[i])
            entries.push_back(CertEntry{p, v, sol.x[i]});
    }
    WeightCertificate cert{lp.word,     lp.dim,    entries,
                           Rational(1), sol.x[k],  lp.fixed_letter,
                           lp.window};
    return LpSolution{sol.x[k], cert, rounds, static_cast<long>(active.size())};
}

}  // namespace wordgrid
