// wg: command-line front end for the wordgrid library.
//
// Subcommands: c1, count, cert, lp, oracle, queens, reduce, fourier.
// Exit codes: 0 ok, 2 trivial word, 3 parse error, 4 invalid certificate,
// 5 budget exhausted, 1 anything else.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordgrid/analysis.hpp"
#include "wordgrid/certificate.hpp"
#include "wordgrid/count.hpp"
#include "wordgrid/errors.hpp"
#include "wordgrid/grid.hpp"
#include "wordgrid/lp.hpp"
#include "wordgrid/oracle.hpp"
#include "wordgrid/queens.hpp"
#include "wordgrid/rational.hpp"
#include "wordgrid/reductions.hpp"
#include "wordgrid/word.hpp"

using json = nlohmann::ordered_json;
using namespace wordgrid;

namespace {

std::string rat(const Rational& q) { return to_string(q); }

std::string point_str(const Point& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i)
        out += (i ? "," : "") + std::to_string(p[i]);
    return out;
}

void emit(const json& payload, const std::string& format) {
    if (format == "json") {
        std::cout << payload.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : payload.items()) {
        if (value.is_string())
            std::cout << key << ": " << value.get<std::string>() << "\n";
        else
            std::cout << key << ": " << value.dump() << "\n";
    }
}

std::vector<long> parse_long_list(const std::string& spec, char sep) {
    std::vector<long> out;
    std::istringstream in(spec);
    std::string part;
    while (std::getline(in, part, sep)) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stol(part, &pos));
            if (pos != part.size())
                throw ParseError("trailing characters in '" + part + "'");
        } catch (const std::logic_error&) {
            throw ParseError("expected an integer, got '" + part + "'");
        }
    }
    if (out.empty())
        throw ParseError("empty list '" + spec + "'");
    return out;
}

// "3x3" or "2" -> every point of the box [0,a) x [0,b) x ...
std::vector<Point> parse_window(const std::string& spec, int dim) {
    std::vector<long> ext = parse_long_list(spec, 'x');
    if (static_cast<int>(ext.size()) != dim)
        throw ParseError("window rank does not match --dim");
    for (long e : ext)
        if (e < 1)
            throw ParseError("window extents must be positive");
    std::vector<Point> window;
    Point p(dim, 0);
    while (true) {
        window.push_back(p);
        int i = dim - 1;
        while (i >= 0 && p[i] == ext[i] - 1)
            p[i--] = 0;
        if (i < 0)
            break;
        ++p[i];
    }
    return window;
}

long parse_budget(const std::string& spec) {
    // accepts 1000000 or 1e8 style; -1 means unlimited
    if (spec == "-1")
        return -1;
    try {
        std::size_t pos = 0;
        double v = std::stod(spec, &pos);
        if (pos != spec.size() || v < 0)
            throw ParseError("bad budget '" + spec + "'");
        return static_cast<long>(v);
    } catch (const std::logic_error&) {
        throw ParseError("bad budget '" + spec + "'");
    }
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

const char* kind_name(ExtremalKind k) {
    switch (k) {
        case ExtremalKind::RepOnly: return "RepOnly";
        case ExtremalKind::PalOnly: return "PalOnly";
        default: return "Mixed";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"word-in-grid concentration toolkit"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    int threads = 1;
    app.add_option("--threads", threads, "worker threads (output is identical)");

    // c1 WORD
    auto* c1_cmd = app.add_subcommand("c1", "closed-form 1-D optimum");
    std::string c1_word;
    c1_cmd->add_option("word", c1_word)->required();

    // count GRIDFILE WORD
    auto* count_cmd = app.add_subcommand("count", "count a word in a grid file");
    std::string count_grid, count_word;
    count_cmd->add_option("grid", count_grid)->required();
    count_cmd->add_option("word", count_word)->required();

    // cert verify|bound FILE
    auto* cert_cmd = app.add_subcommand("cert", "check a weight certificate");
    std::string cert_mode, cert_file, cert_strategy = "bnb", cert_budget = "-1";
    cert_cmd->add_option("mode", cert_mode)->required()
        ->check(CLI::IsMember({"verify", "bound"}));
    cert_cmd->add_option("file", cert_file)->required();
    cert_cmd->add_option("--strategy", cert_strategy)
        ->check(CLI::IsMember({"full", "bnb"}));
    cert_cmd->add_option("--budget", cert_budget);

    // lp WORD --dim --window --fixed-letter --seed [--emit]
    auto* lp_cmd = app.add_subcommand("lp", "solve the bound-search program");
    std::string lp_word, lp_window, lp_emit;
    int lp_dim = 2;
    char lp_fixed = 0;
    std::uint64_t lp_seed = 0;
    lp_cmd->add_option("word", lp_word)->required();
    lp_cmd->add_option("--dim", lp_dim)->required();
    lp_cmd->add_option("--window", lp_window)->required();
    lp_cmd->add_option("--fixed-letter", lp_fixed)->required();
    lp_cmd->add_option("--seed", lp_seed)->required();
    lp_cmd->add_option("--emit", lp_emit, "write the optimal certificate here");

    // oracle WORD --shape [--budget]
    auto* oracle_cmd = app.add_subcommand("oracle", "exact maximum over one shape");
    std::string oracle_word, oracle_shape, oracle_budget = "-1";
    oracle_cmd->add_option("word", oracle_word)->required();
    oracle_cmd->add_option("--shape", oracle_shape)->required();
    oracle_cmd->add_option("--budget", oracle_budget);

    // queens --n --dim [--emit-grid]
    auto* queens_cmd = app.add_subcommand("queens", "modular nonattacking queens");
    long queens_n = 0;
    int queens_dim = 2;
    std::string queens_emit;
    queens_cmd->add_option("--n", queens_n)->required();
    queens_cmd->add_option("--dim", queens_dim);
    queens_cmd->add_option("--emit-grid", queens_emit);

    // reduce --word --target --map --gamma0 --check-upto
    auto* reduce_cmd = app.add_subcommand("reduce", "verify a projection reduction");
    std::string red_word, red_target, red_map, red_gamma0;
    long red_upto = 8;
    reduce_cmd->add_option("--word", red_word)->required();
    reduce_cmd->add_option("--target", red_target)->required();
    reduce_cmd->add_option("--map", red_map, "comma-separated X:Y pairs");
    reduce_cmd->add_option("--gamma0", red_gamma0)->required();
    reduce_cmd->add_option("--check-upto", red_upto);

    // fourier lemma72|spread
    auto* fourier_cmd = app.add_subcommand("fourier", "analytic inequality checks");
    std::string fr_mode, fr_grid;
    int fr_dim = 2;
    char fr_letter = 'A';
    std::uint64_t fr_seed = 0;
    bool fr_has_seed = false;
    fourier_cmd->add_option("mode", fr_mode)->required()
        ->check(CLI::IsMember({"lemma72", "spread"}));
    fourier_cmd->add_option("--dim", fr_dim);
    fourier_cmd->add_option("--grid", fr_grid);
    fourier_cmd->add_option("--letter", fr_letter);
    fourier_cmd->add_option("--seed", fr_seed)->each([&](const std::string&) {
        fr_has_seed = true;
    });

    CLI11_PARSE(app, argc, argv);

    json out;
    Timer timer;

    if (*c1_cmd) {
        Word w(c1_word);
        WordProfile pr = profile(w);
        ExtremalClass cls = classify_extremal(w);
        out["word"] = w.letters();
        out["ell"] = pr.ell;
        out["c_left"] = pr.c_left;
        out["c_right"] = pr.c_right;
        out["c_repeat"] = pr.c_repeat;
        out["palindrome"] = pr.is_palindrome;
        out["c1"] = rat(c1(w));
        out["class"] = kind_name(cls.kind);
        out["construct_rep"] = construct_rep(w).cells();
        if (!pr.is_palindrome)
            out["construct_pal"] = construct_pal(w).cells();
    } else if (*count_cmd) {
        Grid g = parse_grid_file(count_grid);
        Word w(count_word);
        out["count"] = count(w, g);
        out["size"] = g.size();
        out["concentration"] = rat(concentration(w, g));
        json by_class = json::object();
        for (auto [j, c] : count_by_class(w, g))
            by_class[std::to_string(j)] = c;
        out["count_by_class"] = by_class;
    } else if (*cert_cmd) {
        WeightCertificate cert = parse_certificate_file(cert_file);
        EnumStrategy strategy = cert_strategy == "full" ? EnumStrategy::FullEnum
                                                        : EnumStrategy::BranchAndBound;
        long budget = parse_budget(cert_budget);
        out["word"] = cert.word.letters();
        out["dim"] = cert.dim;
        out["entries"] = cert.entries.size();
        if (cert_mode == "verify") {
            ConditionIReport ci = check_condition_i(cert);
            json per_class = json::object();
            for (auto& [j, v] : ci.per_class)
                per_class[std::to_string(j)] = rat(v);
            out["condition_i_per_class"] = per_class;
            out["condition_i"] = ci.ok;
            ConditionIIReport cii = check_condition_ii(cert, strategy, budget);
            if (!cii.complete)
                throw BudgetExceededError("condition (ii) budget exhausted");
            out["condition_ii_max"] = rat(cii.max_found);
            json witness = json::array();
            for (auto& [p, c] : cii.witness)
                witness.push_back(point_str(p) + "=" + c);
            out["condition_ii_witness"] = witness;
            out["condition_ii_nodes"] = cii.nodes;
            out["condition_ii"] = cii.ok.value();
            if (!ci.ok)
                throw CertificateInvalidError("condition (i) fails");
            if (!cii.ok.value())
                throw CertificateInvalidError("condition (ii) fails: max " +
                                              rat(cii.max_found) + " > " + rat(cert.M));
        }
        BoundReport report = certified_bound(cert, strategy, budget, cert_file);
        out["K"] = rat(cert.K);
        out["M"] = rat(cert.M);
        out["bound"] = rat(report.value);
    } else if (*lp_cmd) {
        Word w(lp_word);
        LinearProgram lp = build_lp(w, lp_dim, parse_window(lp_window, lp_dim),
                                    lp_fixed);
        out["raw_variables"] = lp.raw_support;
        out["raw_constraints"] = lp.raw_constraints;
        out["variables"] = lp.orbits.size();
        out["constraints"] = lp.grid_rows.size();
        LpSolution sol = solve_lp(lp, lp_seed);
        out["optimum"] = rat(sol.optimum);
        out["rounds"] = sol.rounds;
        out["active_constraints"] = sol.active_constraints;
        if (!lp_emit.empty()) {
            std::ofstream f(lp_emit);
            f << format_certificate(sol.cert);
            out["emitted"] = lp_emit;
        }
    } else if (*oracle_cmd) {
        Word w(oracle_word);
        Shape shape{parse_long_list(oracle_shape, ',')};
        OracleOptions opt;
        opt.node_budget = parse_budget(oracle_budget);
        OracleResult res = max_concentration(w, shape, opt);
        if (!res.complete)
            throw BudgetExceededError("oracle budget exhausted; best so far " +
                                      rat(res.best));
        out["best"] = rat(res.best);
        out["nodes"] = res.nodes;
        json witnesses = json::array();
        for (const Grid& g : res.witnesses)
            witnesses.push_back(g.cells());
        out["witnesses"] = witnesses;
    } else if (*queens_cmd) {
        QueensPlacement q = queens_dim == 2 ? polya_queens(queens_n)
                                            : power_queens(queens_n, queens_dim);
        out["n"] = q.n;
        out["dim"] = q.d;
        out["queens"] = q.positions.size();
        out["nonattacking"] = nonattacking(q);
        Grid g = queens_to_grid(q, q.n);
        Word ab("A" + std::string(q.n - 1, 'B'));
        out["word"] = ab.letters();
        out["concentration"] = rat(concentration(ab, g));
        if (!queens_emit.empty()) {
            std::ofstream f(queens_emit);
            f << format_grid(g);
            out["emitted"] = queens_emit;
        }
    } else if (*reduce_cmd) {
        Word w(red_word), target(red_target);
        ReductionCheck rc{w, target, parse_letter_map(red_map, w.alphabet()),
                          parse_grid_file(red_gamma0)};
        rc = verify_reduction(rc, red_upto);
        out["word"] = w.letters();
        out["target"] = target.letters();
        out["ratio"] = rat(rc.ratio_r);
        out["a_ok"] = rc.a_ok;
        out["b_ok"] = rc.b_ok;
        out["c_ok"] = rc.c_ok;
        out["c_checked_up_to"] = rc.c_checked_up_to;
        out["all_ok"] = rc.a_ok && rc.b_ok && rc.c_ok;
    } else if (*fourier_cmd) {
        if (fr_mode == "lemma72") {
            if (!fr_has_seed)
                throw ParseError("fourier lemma72 needs an explicit --seed");
            long cells = 1;
            for (int i = 0; i < fr_dim; ++i)
                cells *= 3;
            std::uint64_t state = fr_seed;
            std::vector<Rational> f;
            for (long i = 0; i < cells; ++i)
                f.push_back(frac(static_cast<long>(splitmix64(state) % 17), 16));
            Lemma72Report rep = lemma72_check(fr_dim, f);
            out["dim"] = fr_dim;
            out["lhs"] = rat(rep.lhs);
            out["rhs"] = rat(rep.rhs);
            out["holds"] = rep.holds;
        } else {
            if (fr_grid.empty())
                throw ParseError("fourier spread needs --grid");
            SpreadReport rep = searchline_spread(parse_grid_file(fr_grid), fr_letter);
            out["max_diff"] = rep.max_diff;
            out["bound"] = rep.bound;
            out["holds"] = rep.holds;
        }
    }

    out["status"] = "ok";
    emit(out, format);
    // stderr so that stdout stays byte-identical across runs
    std::cerr << "elapsed: " << timer.seconds() << "s\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::string format = "text";
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--format")
            format = argv[i + 1];
    auto fail = [&](const char* kind, const std::string& what, int code) {
        json err{{"status", "error"}, {"kind", kind}, {"message", what}};
        if (format == "json")
            std::cout << err.dump(2) << "\n";
        else
            std::cerr << "error (" << kind << "): " << what << "\n";
        return code;
    };
    try {
        return run(argc, argv);
    } catch (const TrivialWordError& e) {
        return fail("trivial-word", e.what(), 2);
    } catch (const ParseError& e) {
        return fail("parse", e.what(), 3);
    } catch (const CertificateInvalidError& e) {
        return fail("certificate-invalid", e.what(), 4);
    } catch (const BudgetExceededError& e) {
        return fail("budget-exceeded", e.what(), 5);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 1);
    }
}
