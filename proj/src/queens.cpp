#include "wordgrid/queens.hpp"

#include <numeric>

#include "wordgrid/count.hpp"
#include "wordgrid/errors.hpp"

namespace wordgrid {

bool nonattacking(const QueensPlacement& q) {
    const long n = q.n;
    const auto dirs = directions(q.d);
    for (std::size_t a = 0; a < q.positions.size(); ++a) {
        for (std::size_t b = a + 1; b < q.positions.size(); ++b) {
            Point diff(q.d);
            for (int c = 0; c < q.d; ++c)
                diff[c] = mod(q.positions[a][c] - q.positions[b][c], n);
            for (const Point& v : dirs) {
                for (long lam = 0; lam < n; ++lam) {
                    bool hit = true;
                    for (int c = 0; c < q.d; ++c)
                        if (diff[c] != mod(lam * v[c], n)) {
                            hit = false;
                            break;
                        }
                    if (hit)
                        return false;
                }
            }
        }
    }
    return true;
}

QueensPlacement polya_queens(long n) {
    if (n < 1 || std::gcd(n, 6L) != 1)
        throw GcdError("polya placement needs gcd(n, 6) = 1");
    QueensPlacement q{n, 2, {}};
    for (long i = 0; i < n; ++i)
        q.positions.push_back({i, mod(2 * i, n)});
    return q;
}

QueensPlacement power_queens(long n, int d) {
    if (d < 2)
        throw DomainError("power placement needs d >= 2");
    // gcd(n, (2^d)!) = 1 iff n is coprime to every integer up to 2^d
    for (long f = 2; f <= (1L << d); ++f)
        if (std::gcd(n, f) != 1)
            throw GcdError("power placement needs gcd(n, (2^d)!) = 1");
    QueensPlacement q{n, d, {}};
    std::vector<long> alpha(d - 1, 0);
    while (true) {
        long first = 0;
        for (int i = 1; i <= d - 1; ++i)
            first += (1L << i) * alpha[i - 1];
        Point p(d);
        p[0] = mod(first, n);
        for (int i = 1; i < d; ++i)
            p[i] = alpha[i - 1];
        q.positions.push_back(p);
        int i = d - 2;
        while (i >= 0 && alpha[i] == n - 1)
            alpha[i--] = 0;
        if (i < 0)
            break;
        ++alpha[i];
    }
    return q;
}

Grid queens_to_grid(const QueensPlacement& q, long ell) {
    if (q.n != ell)
        throw ShapeError("board size must equal the word length");
    Shape shape{std::vector<long>(q.d, q.n)};
    std::string cells(shape.size(), 'B');
    Grid probe(shape, cells);
    for (const Point& p : q.positions)
        cells[probe.index(p)] = 'A';
    return Grid(shape, cells);
}

namespace {

struct QueensSearch {
    long n;
    int target;
    std::vector<char> col, diag_sum, diag_diff;
    std::vector<Point> placed;
    long budget;
    long nodes = 0;
    bool out_of_budget = false;

    bool run(long row) {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        if (static_cast<int>(placed.size()) == target)
            return true;
        if (row == n || static_cast<long>(placed.size()) + (n - row) < target)
            return false;
        for (long c = 0; c < n; ++c) {
            long s = mod(row + c, n), d = mod(row - c, n);
            if (col[c] || diag_sum[s] || diag_diff[d])
                continue;
            col[c] = diag_sum[s] = diag_diff[d] = 1;
            placed.push_back({row, c});
            if (run(row + 1))
                return true;
            if (out_of_budget)
                return false;
            placed.pop_back();
            col[c] = diag_sum[s] = diag_diff[d] = 0;
        }
        return run(row + 1);  // leave this row empty
    }
};

}  // namespace

std::optional<QueensPlacement> search_queens(long n, int d, int target,
                                             long node_budget) {
    if (d != 2)
        throw DomainError("queens search is implemented for d = 2 only");
    if (n < 1 || n > 16)
        throw DomainError("queens search supports n <= 16");
    QueensSearch s{n, target, std::vector<char>(n, 0), std::vector<char>(n, 0),
                   std::vector<char>(n, 0), {}, node_budget};
    if (s.run(0))
        return QueensPlacement{n, 2, s.placed};
    if (s.out_of_budget)
        throw BudgetExceededError("queens search budget exhausted");
    return std::nullopt;
}

const std::map<std::string, Grid>& paper_grids() {
    static const std::map<std::string, Grid> grids = [] {
        auto make = [](std::vector<long> ext, std::string cells) {
            return Grid(Shape{std::move(ext)}, std::move(cells));
        };
        std::map<std::string, Grid> m;
        m.insert({"fig1-left", make({5, 5},
                                    "ABBBB"
                                    "BBBAB"
                                    "BABBB"
                                    "BBBBA"
                                    "BBABB")});
        m.insert({"fig1-right", make({4, 4},
                                     "ABBB"
                                     "ABBB"
                                     "ABBB"
                                     "ABBB")});
        m.insert({"lemma67", make({5, 5},
                                  "ABBBB"
                                  "BBBAB"
                                  "BABBB"
                                  "BBBBA"
                                  "BBABB")});
        m.insert({"fig7-left", make({6, 6},
                                    "ABABBB"
                                    "BBBBAB"
                                    "BBBBBB"
                                    "BABBBB"
                                    "BBBABA"
                                    "BBBBBB")});
        m.insert({"fig7-right", make({8, 8},
                                     "BBBBABBB"
                                     "BBBBBABB"
                                     "BABBBBBB"
                                     "ABBBBBBB"
                                     "BBBBBBAB"
                                     "BBBABBBB"
                                     "BBBBBBBA"
                                     "BBABBBBB")});
        m.insert({"fig9-diag", make({3, 3},
                                    "ABB"
                                    "BAB"
                                    "BBA")});
        m.insert({"fig9-stack", make({3, 3},
                                     "ABB"
                                     "ABB"
                                     "ABB")});
        return m;
    }();
    return grids;
}

}  // namespace wordgrid
