// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. `--nightly` additionally runs the slow ABBB certificate.

#include <cstdint>
#include <cstring>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "wordgrid/analysis.hpp"
#include "wordgrid/certificate.hpp"
#include "wordgrid/count.hpp"
#include "wordgrid/grid.hpp"
#include "wordgrid/lp.hpp"
#include "wordgrid/oracle.hpp"
#include "wordgrid/queens.hpp"
#include "wordgrid/reductions.hpp"
#include "wordgrid/word.hpp"

using namespace wordgrid;

namespace {

const std::string kDataDir = WORDGRID_DATA_DIR;
bool all_pass = true;

void report(int criterion, const std::string& what, bool ok) {
    std::cout << "criterion " << criterion << " [" << what << "]: "
              << (ok ? "PASS" : "FAIL") << "\n";
    all_pass = all_pass && ok;
}

std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Grid random_grid(std::uint64_t& state, const Shape& shape,
                 const std::string& letters) {
    std::string cells(shape.size(), '?');
    for (char& c : cells)
        c = letters[splitmix64(state) % letters.size()];
    return Grid(shape, cells);
}

// 1: every nontrivial binary word of length 2..6 matches the oracle
void criterion1() {
    bool ok = true;
    int words = 0;
    for (int ell = 2; ell <= 6 && ok; ++ell) {
        for (int mask = 1; mask + 1 < (1 << ell) && ok; ++mask) {
            std::string s;
            for (int i = 0; i < ell; ++i)
                s += (mask >> i) & 1 ? 'B' : 'A';
            ++words;
            if (!verify_c1(Word(s), 12))
                ok = false;
        }
    }
    report(1, "closed form vs oracle, " + std::to_string(words) +
                  " binary words", ok);
}

// 2: the published concentration table
void criterion2() {
    const auto& grids = paper_grids();
    bool ok =
        concentration(Word("ABBB"), grids.at("fig1-left")) == frac(8, 5) &&
        concentration(Word("ABBB"), grids.at("fig1-right")) == frac(3, 2) &&
        concentration(Word("BABBB"), grids.at("lemma67")) == frac(8, 5) &&
        concentration(Word("ABBBBB"), grids.at("fig7-left")) == frac(40, 36) &&
        concentration(Word("ABBBBBBB"), grids.at("fig7-right")) == frac(56, 64) &&
        concentration(Word("ABBBBBB"), queens_to_grid(polya_queens(7), 7)) ==
            frac(8, 7) &&
        concentration(Word("ABB"), grids.at("fig9-diag")) == 2 &&
        concentration(Word("ABB"), grids.at("fig9-stack")) == 2;
    report(2, "concentration table", ok);
}

// 3: the certificate suite
void criterion3(bool nightly) {
    auto bound = [](const std::string& file, EnumStrategy strategy) {
        return certified_bound(parse_certificate_file(kDataDir + "/" + file),
                               strategy)
            .value;
    };
    bool ok = true;
    ok = ok && bound("fig2-ab.cert", EnumStrategy::FullEnum) == 3;
    ok = ok && bound("fig3-abb.cert", EnumStrategy::FullEnum) == 2;
    ok = ok &&
         certified_bound(ab_power_certificate(3), EnumStrategy::FullEnum).value == 9;
    ok = ok && bound("fig4-abcc.cert", EnumStrategy::BranchAndBound) == frac(6, 5);
    ok = ok && bound("fig6-babbb.cert", EnumStrategy::BranchAndBound) == frac(8, 5);
    report(3, "certificate suite", ok);
    if (nightly) {
        bool night = bound("fig8-abbb.cert", EnumStrategy::BranchAndBound) ==
                     frac(59526, 35459);
        report(3, "certificate suite, nightly ABBB bound 59526/35459", night);
    }
}

// 4: LP pipeline
void criterion4() {
    auto box = [](long a, long b) {
        std::vector<Point> window;
        for (long x = 0; x < a; ++x)
            for (long y = 0; y < b; ++y)
                window.push_back({x, y});
        return window;
    };
    LpSolution abb = solve_lp(build_lp(Word("ABB"), 2, box(3, 3), 'B'), 2024);
    LpSolution ab = solve_lp(build_lp(Word("AB"), 2, box(2, 2), 'B'), 2024);
    bool ok = abb.optimum == 2 && ab.optimum == 3 &&
              certified_bound(abb.cert, EnumStrategy::FullEnum).value == 2 &&
              certified_bound(ab.cert, EnumStrategy::FullEnum).value == 3;
    report(4, "LP bounds 2 and 3 with re-verified certificates", ok);
}

// 5: queens constructions
void criterion5() {
    bool ok = true;
    for (long n = 5; n <= 49; ++n) {
        if (std::gcd(n, 6L) != 1)
            continue;
        QueensPlacement q = polya_queens(n);
        if (!nonattacking(q))
            ok = false;
    }
    Grid cube = queens_to_grid(power_queens(11, 3), 11);
    ok = ok && concentration(Word("A" + std::string(10, 'B')), cube) == frac(26, 11);
    report(5, "queens placements and 26/11 concentration", ok);
}

// 6: reductions
void criterion6() {
    bool ok = true;
    auto run = [&](const char* w, const char* target, const char* map,
                   const char* gamma0) {
        Word word(w);
        ReductionCheck rc{word, Word(target),
                          parse_letter_map(map, word.alphabet()), Grid(gamma0)};
        rc = verify_reduction(rc, 9);
        if (!(rc.a_ok && rc.b_ok && rc.c_ok))
            ok = false;
    };
    run("ABCA", "ABB", "C:B", "ABC");
    run("ABBC", "ABB", "C:A", "ABBCBB");
    run("ABBA", "ABB", "", "ABB");
    run("BABB", "ABB", "", "ABB");

    std::uint64_t state = 6;
    for (int trial = 0; trial < 200; ++trial) {
        long a = 2 * (1 + static_cast<long>(splitmix64(state) % 3));
        long b = 2 * (1 + static_cast<long>(splitmix64(state) % 3));
        Grid g = random_grid(state, Shape{{a, b}}, "AB");
        if (!check_repetition_inequality(Word("AB"), 2, g))
            ok = false;
    }

    for (const char* word : {"ABA", "ABACA"}) {
        Word w{word};
        std::string letters(w.alphabet().begin(), w.alphabet().end());
        for (int trial = 0; trial < 100; ++trial) {
            Grid g = random_grid(
                state, Shape{{2 + static_cast<long>(splitmix64(state) % 7)}},
                letters);
            Grid out = to_parity_respecting(w, g);
            auto [n_in, d_in] = parity_ratio(w, g);
            auto [n_out, d_out] = parity_ratio(w, out);
            if (!is_parity_respecting(w, out) || d_out == 0 ||
                (d_in != 0 && n_out * d_in < n_in * d_out))
                ok = false;
        }
    }
    report(6, "reductions, repetition, parity rewrites", ok);
}

// 7: theorem-backed invariants
void criterion7() {
    bool ok = true;
    std::uint64_t state = 7;

    // concentration <= (3^d - 1)/2 * C1 and stacking factor 3
    for (int trial = 0; trial < 100; ++trial) {
        std::string s;
        for (int i = 0; i < 2 + static_cast<int>(splitmix64(state) % 4); ++i)
            s += splitmix64(state) % 2 ? 'B' : 'A';
        Word w = Word(s).alphabet().size() > 1 ? Word(s) : Word("AB");
        int d = 1 + static_cast<int>(splitmix64(state) % 2);
        std::vector<long> ext;
        for (int i = 0; i < d; ++i)
            ext.push_back(2 + static_cast<long>(splitmix64(state) % 4));
        Grid g = random_grid(state, Shape{ext}, "AB");
        Rational cap = d == 1 ? 1 : 4;  // (3^d - 1) / 2
        if (concentration(w, g) > cap * c1(w))
            ok = false;
        if (count(w, stack(g)) != 3 * count(w, g))
            ok = false;
        if (!stability_gap(w, random_grid(
                                  state,
                                  Shape{{2 + static_cast<long>(splitmix64(state) % 7)}},
                                  "AB"))
                 .holds)
            ok = false;
    }

    for (int trial = 0; trial < 1000 && ok; ++trial) {
        int d = 1 + static_cast<int>(splitmix64(state) % 3);
        long cells = 1;
        for (int i = 0; i < d; ++i)
            cells *= 3;
        std::vector<Rational> f;
        for (long i = 0; i < cells; ++i)
            f.push_back(frac(static_cast<long>(splitmix64(state) % 33), 32));
        if (!lemma72_check(d, f).holds)
            ok = false;
    }

    for (int trial = 0; trial < 500 && ok; ++trial) {
        int d = 2 + static_cast<int>(splitmix64(state) % 2);
        long n = 2 + static_cast<long>(splitmix64(state) % ((1L << d) - 2));
        if (!searchline_spread(random_grid(state, Shape{std::vector<long>(d, n)}, "AB"),
                               'A')
                 .holds)
            ok = false;
    }
    report(7, "theorem-backed property suites", ok);
}

}  // namespace

int main(int argc, char** argv) {
    bool nightly = argc > 1 && std::strcmp(argv[1], "--nightly") == 0;
    try {
        criterion1();
        criterion2();
        criterion3(nightly);
        criterion4();
        criterion5();
        criterion6();
        criterion7();
    } catch (const std::exception& e) {
        std::cout << "unexpected exception: " << e.what() << "\n";
        all_pass = false;
    }
    std::cout << (all_pass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
    return all_pass ? 0 : 1;
}
