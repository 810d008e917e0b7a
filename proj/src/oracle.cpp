#include "wordgrid/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "wordgrid/analysis.hpp"
#include "wordgrid/errors.hpp"

namespace wordgrid {

namespace {

struct Slot {
    std::vector<std::pair<long, char>> reqs;  // (cell, required letter)
};

struct Search {
    std::vector<char> letters;
    long n_cells = 0;
    std::vector<Slot> slots;
    std::vector<std::vector<std::pair<int, char>>> cell_slots;

    std::string assignment;
    std::vector<int> remaining;  // undecided required cells per slot
    std::vector<char> falsified;
    long matched = 0;
    long falsified_total = 0;

    long best = -1;
    std::vector<std::string> best_cells;
    int witness_cap = 8;
    bool bnb = true;
    long budget = -1;
    long nodes = 0;
    bool complete = true;

    void run(long cell) {
        ++nodes;
        if (budget >= 0 && nodes > budget) {
            complete = false;
            return;
        }
        if (cell == n_cells) {
            if (matched > best) {
                best = matched;
                best_cells.clear();
            }
            if (matched == best && static_cast<int>(best_cells.size()) < witness_cap)
                best_cells.push_back(assignment);
            return;
        }
        if (bnb && static_cast<long>(slots.size()) - falsified_total < best)
            return;
        for (char L : letters) {
            std::vector<std::pair<int, int>> undo;  // (slot, 0=decrement 1=falsify)
            for (auto [s, req] : cell_slots[cell]) {
                if (falsified[s])
                    continue;
                if (req == L) {
                    if (--remaining[s] == 0)
                        ++matched;
                    undo.push_back({s, 0});
                } else {
                    falsified[s] = 1;
                    ++falsified_total;
                    undo.push_back({s, 1});
                }
            }
            assignment[cell] = L;
            run(cell + 1);
            for (auto [s, kind] : undo) {
                if (kind == 0) {
                    if (remaining[s]++ == 0)
                        --matched;
                } else {
                    falsified[s] = 0;
                    --falsified_total;
                }
            }
            if (!complete)
                return;
        }
    }
};

}  // namespace

OracleResult max_concentration(const Word& w, const Shape& shape,
                               const OracleOptions& opt) {
    w.require_nontrivial();
    std::vector<char> letters(w.alphabet().begin(), w.alphabet().end());
    Grid probe(shape, std::string(shape.size(), letters[0]));

    std::vector<Slot> slots;
    for (const Point& v : directions(shape.dim())) {
        for (long idx = 0; idx < shape.size(); ++idx) {
            Point p = probe.point_at(idx);
            std::map<long, char> req;
            bool feasible = true;
            for (std::size_t i = 0; i < w.size() && feasible; ++i) {
                long cell = probe.index(p);
                auto [it, fresh] = req.insert({cell, w[i]});
                if (!fresh && it->second != w[i])
                    feasible = false;  // wraparound demands two letters at once
                for (int c = 0; c < shape.dim(); ++c)
                    p[c] += v[c];
            }
            if (feasible)
                slots.push_back(Slot{{req.begin(), req.end()}});
        }
    }

    Search s;
    s.letters = letters;
    s.n_cells = shape.size();
    s.slots = std::move(slots);
    s.witness_cap = opt.witness_cap;
    s.bnb = opt.branch_and_bound;
    s.budget = opt.node_budget;
    s.cell_slots.resize(shape.size());
    for (int i = 0; i < static_cast<int>(s.slots.size()); ++i)
        for (auto [cell, letter] : s.slots[i].reqs)
            s.cell_slots[cell].push_back({i, letter});
    s.assignment.assign(shape.size(), letters[0]);
    s.remaining.resize(s.slots.size());
    for (std::size_t i = 0; i < s.slots.size(); ++i)
        s.remaining[i] = static_cast<int>(s.slots[i].reqs.size());
    s.falsified.assign(s.slots.size(), 0);
    s.run(0);

    OracleResult out;
    out.best = frac(std::max(s.best, 0L), shape.size());
    for (const std::string& cells : s.best_cells)
        out.witnesses.push_back(Grid(shape, cells));
    out.shapes_searched = {shape};
    out.nodes = s.nodes;
    out.complete = s.complete;
    return out;
}

bool verify_c1(const Word& w, long n_max, const OracleOptions& opt) {
    WordProfile p = profile(w);
    if (n_max < 2 * p.ell)
        throw ShapeError("n_max must be at least 2*ell");
    Rational target = c1(w);
    Rational best = 0;
    std::vector<long> attained;
    for (long n = 1; n <= n_max; ++n) {
        OracleResult r = max_concentration(w, Shape({n}), opt);
        if (!r.complete)
            throw BudgetExceededError("oracle budget exhausted at n=" + std::to_string(n));
        if (r.best > best)
            best = r.best;
        if (r.best == target)
            attained.push_back(n);
    }
    if (best != target)
        return false;
    for (long n : attained)
        if (n <= 2 * p.ell - 2 || n == p.ell - p.c_repeat)
            return true;
    return false;
}

Lemma72Report lemma72_check(int d, const std::vector<Rational>& f) {
    if (d < 1 || d > 4)
        throw DomainError("d must be between 1 and 4");
    long n = 1;
    for (int i = 0; i < d; ++i)
        n *= 3;
    if (static_cast<long>(f.size()) != n)
        throw DomainError("f must have 3^d values");
    for (const Rational& q : f)
        if (q < 0 || q > 1)
            throw DomainError("f values must lie in [0,1]");

    // index arithmetic in base 3, digitwise mod 3
    auto add = [&](long a, long b) {
        long out = 0, place = 1;
        for (int i = 0; i < d; ++i) {
            out += (a % 3 + b % 3) % 3 * place;
            a /= 3;
            b /= 3;
            place *= 3;
        }
        return out;
    };

    Rational alpha = 0;
    for (const Rational& q : f)
        alpha += q;
    alpha /= n;

    Rational sum = 0;
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) {
            long xy = add(x, y);
            sum += f[x] * (1 - f[xy]) * (1 - f[add(xy, y)]);
        }
    Rational lhs = sum / (Rational(n) * n);
    Rational rhs = Rational(3, 2) * alpha * (1 - alpha) * (1 - alpha);
    return Lemma72Report{lhs, rhs, lhs <= rhs};
}

SpreadReport searchline_spread(const Grid& g, char a) {
    const int d = g.dim();
    const long n = g.shape().extents[0];
    for (long e : g.shape().extents)
        if (e != n)
            throw ShapeError("spread bound needs a cubic grid");
    if (n >= (1L << d))
        throw ShapeError("spread bound needs n < 2^d");

    long lo = -1, hi = 0;
    for (const SearchLine& line : search_lines(g)) {
        long c = std::count(line.line.cells().begin(), line.line.cells().end(), a);
        hi = std::max(hi, c);
        lo = lo < 0 ? c : std::min(lo, c);
    }
    long diff = hi - lo;

    long total = std::count(g.cells().begin(), g.cells().end(), a);
    Rational alpha = frac(total, g.size());
    Rational beta = 1 - alpha;
    Rational m = std::min(alpha, beta);
    long pow3 = 1;
    for (int i = 0; i < d; ++i)
        pow3 *= 3;
    bool holds = Rational(diff * diff) * pow3 >= m * n * n;
    double bound = std::sqrt(m.get_d() / pow3) * static_cast<double>(n);
    return SpreadReport{diff, bound, holds};
}

}  // namespace wordgrid
