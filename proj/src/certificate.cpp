#include "wordgrid/certificate.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "wordgrid/count.hpp"
#include "wordgrid/errors.hpp"

namespace wordgrid {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    std::string s = pos == std::string::npos ? line : line.substr(0, pos);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.pop_back();
    return s;
}

void validate(const WeightCertificate& cert) {
    cert.word.require_nontrivial();
    if (cert.dim < 1)
        throw ParseError("certificate dimension must be >= 1");
    if (cert.K <= 0)
        throw CertificateInvalidError("claimed K must be positive");
    for (const CertEntry& e : cert.entries) {
        if (static_cast<int>(e.p.size()) != cert.dim ||
            static_cast<int>(e.v.size()) != cert.dim)
            throw ParseError("entry dimension mismatch");
        if (weight_class(e.v) == 0)
            throw ParseError("zero direction in certificate entry");
        for (long c : e.v)
            if (c < -1 || c > 1)
                throw ParseError("direction components must be in {-1,0,1}");
        if (e.weight < 0)
            throw CertificateInvalidError("negative weight in certificate");
    }
    if (cert.window && !cert.fixed_letter)
        throw ParseError("window requires a fixed letter");
}

}  // namespace

WeightCertificate parse_certificate(std::istream& in) {
    std::optional<Word> word;
    int dim = 0;
    std::optional<Rational> K, M;
    std::optional<char> fixed_letter;
    std::optional<std::vector<Point>> window;
    std::vector<CertEntry> entries;

    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = strip_comment(raw);
        if (line.empty())
            continue;
        std::istringstream ls(line);
        if (line.find(':') != std::string::npos) {
            std::string key;
            ls >> key;
            std::string value;
            std::getline(ls, value);
            value.erase(0, value.find_first_not_of(' '));
            if (key == "word:") {
                word = Word(value);
            } else if (key == "dim:") {
                dim = std::stoi(value);
            } else if (key == "K:") {
                K = parse_rational(value);
            } else if (key == "M:") {
                M = parse_rational(value);
            } else if (key == "fixed-letter:") {
                if (value.size() != 1)
                    throw ParseError("fixed-letter must be a single symbol");
                fixed_letter = value[0];
            } else if (key == "window:") {
                window.emplace();
                std::istringstream ws(value);
                std::string part;
                while (std::getline(ws, part, ';')) {
                    std::istringstream ps(part);
                    Point p;
                    long c;
                    while (ps >> c)
                        p.push_back(c);
                    if (p.empty())
                        throw ParseError("empty window point");
                    window->push_back(p);
                }
            } else {
                throw ParseError("unknown certificate key: " + key);
            }
            continue;
        }
        if (dim == 0)
            throw ParseError("certificate entries before dim");
        CertEntry e;
        e.p.resize(dim);
        e.v.resize(dim);
        for (int i = 0; i < dim; ++i)
            if (!(ls >> e.p[i]))
                throw ParseError("bad entry line: " + raw);
        for (int i = 0; i < dim; ++i)
            if (!(ls >> e.v[i]))
                throw ParseError("bad entry line: " + raw);
        std::string wtext;
        if (!(ls >> wtext))
            throw ParseError("entry missing weight: " + raw);
        e.weight = parse_rational(wtext);
        entries.push_back(e);
    }
    if (!word || dim == 0 || !K || !M)
        throw ParseError("certificate is missing word/dim/K/M");
    WeightCertificate cert{*word, dim, entries, *K, *M, fixed_letter, window};
    validate(cert);
    return cert;
}

WeightCertificate parse_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open certificate file: " + path);
    return parse_certificate(in);
}

std::string format_certificate(const WeightCertificate& cert) {
    std::ostringstream out;
    out << "word: " << cert.word.letters() << '\n';
    out << "dim: " << cert.dim << '\n';
    out << "K: " << to_string(cert.K) << '\n';
    out << "M: " << to_string(cert.M) << '\n';
    if (cert.fixed_letter)
        out << "fixed-letter: " << *cert.fixed_letter << '\n';
    if (cert.window) {
        out << "window:";
        bool first = true;
        for (const Point& p : *cert.window) {
            out << (first ? " " : "; ");
            first = false;
            for (std::size_t i = 0; i < p.size(); ++i)
                out << (i ? " " : "") << p[i];
        }
        out << '\n';
    }
    std::vector<CertEntry> entries = cert.entries;
    std::sort(entries.begin(), entries.end(), [](const CertEntry& a, const CertEntry& b) {
        return std::tie(a.p, a.v) < std::tie(b.p, b.v);
    });
    for (const CertEntry& e : entries) {
        for (long c : e.p)
            out << c << ' ';
        for (long c : e.v)
            out << c << ' ';
        out << to_string(e.weight) << '\n';
    }
    return out.str();
}

ConditionIReport check_condition_i(const WeightCertificate& cert) {
    validate(cert);
    ConditionIReport rep;
    std::map<int, Rational> sums;
    for (int j = 1; j <= cert.dim; ++j)
        sums[j] = 0;
    for (const CertEntry& e : cert.entries)
        sums[weight_class(e.v)] += e.weight;
    rep.ok = true;
    for (int j = 1; j <= cert.dim; ++j) {
        rep.per_class[j] = sums[j] / class_size(cert.dim, j);
        if (rep.per_class[j] != cert.K)
            rep.ok = false;
    }
    return rep;
}

namespace {

// One certificate entry reduced to its requirements on the varying cells.
struct LocalEntry {
    std::vector<std::pair<int, char>> reqs;  // (varying cell index, letter)
    long weight;                             // scaled to integer
};

struct LocalSearch {
    std::vector<char> letters;
    std::vector<LocalEntry> entries;
    std::vector<std::vector<std::pair<int, char>>> cell_entries;
    int n_cells = 0;

    std::string assignment;
    std::vector<int> remaining;
    std::vector<char> falsified;
    long matched = 0;
    long alive = 0;       // total weight minus falsified weight
    long undetermined = 0;  // entries neither matched nor falsified
    bool bnb = true;
    long budget = -1;
    long nodes = 0;
    bool complete = true;

    long best = -1;
    std::string best_assignment;

    void record() {
        if (matched > best) {
            best = matched;
            best_assignment = assignment;
        }
    }

    void run(int cell) {
        ++nodes;
        if (budget >= 0 && nodes > budget) {
            complete = false;
            return;
        }
        if (cell == n_cells || undetermined == 0) {
            record();
            return;
        }
        if (bnb && alive <= best)
            return;
        for (char L : letters) {
            std::vector<std::pair<int, int>> undo;
            for (auto [e, req] : cell_entries[cell]) {
                if (falsified[e])
                    continue;
                if (req == L) {
                    if (--remaining[e] == 0) {
                        matched += entries[e].weight;
                        --undetermined;
                    }
                    undo.push_back({e, 0});
                } else {
                    falsified[e] = 1;
                    alive -= entries[e].weight;
                    --undetermined;
                    undo.push_back({e, 1});
                }
            }
            assignment[cell] = L;
            run(cell + 1);
            for (auto [e, kind] : undo) {
                if (kind == 0) {
                    if (remaining[e]++ == 0) {
                        matched -= entries[e].weight;
                        ++undetermined;
                    }
                } else {
                    falsified[e] = 0;
                    alive += entries[e].weight;
                    ++undetermined;
                }
            }
            if (!complete)
                return;
        }
    }
};

}  // namespace

ConditionIIReport check_condition_ii(const WeightCertificate& cert,
                                     EnumStrategy strategy, long node_budget) {
    validate(cert);
    const int d = cert.dim;
    std::set<Point> window_set;
    if (cert.window)
        window_set.insert(cert.window->begin(), cert.window->end());

    // Per entry: requirements on varying cells, after checking that cells
    // outside the window always ask for the fixed letter.
    struct PendingEntry {
        std::map<Point, char> reqs;
        Rational weight;
        bool dead = false;
    };
    std::vector<PendingEntry> pending;
    std::set<Point> varying_set;
    Rational baseline = 0;
    for (const CertEntry& e : cert.entries) {
        PendingEntry pe;
        pe.weight = e.weight;
        Point p = e.p;
        for (std::size_t i = 0; i < cert.word.size(); ++i) {
            char need = cert.word[i];
            if (cert.window && !window_set.count(p)) {
                if (need != *cert.fixed_letter)
                    throw CertificateInvalidError(
                        "support leaves the window where the word letter is not the "
                        "fixed letter");
                // cell pinned to the fixed letter: requirement always met
            } else {
                auto [it, fresh] = pe.reqs.insert({p, need});
                if (!fresh && it->second != need)
                    pe.dead = true;  // same cell would need two letters
            }
            for (int c = 0; c < d; ++c)
                p[c] += e.v[c];
        }
        if (pe.dead)
            continue;
        if (pe.reqs.empty()) {
            baseline += pe.weight;  // matched by every admissible grid
            continue;
        }
        for (auto& [cell, letter] : pe.reqs)
            varying_set.insert(cell);
        pending.push_back(std::move(pe));
    }

    // Scale the weights to integers for the enumeration hot loop.
    mpz_class denom_lcm = 1;
    for (const PendingEntry& pe : pending)
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                pe.weight.get_den().get_mpz_t());

    std::vector<Point> cells(varying_set.begin(), varying_set.end());
    std::map<Point, int> cell_index;
    for (int i = 0; i < static_cast<int>(cells.size()); ++i)
        cell_index[cells[i]] = i;

    LocalSearch s;
    s.letters.assign(cert.word.alphabet().begin(), cert.word.alphabet().end());
    s.n_cells = static_cast<int>(cells.size());
    for (const PendingEntry& pe : pending) {
        LocalEntry le;
        mpz_class scaled = pe.weight.get_num() * (denom_lcm / pe.weight.get_den());
        if (!scaled.fits_slong_p())
            throw CertificateInvalidError("certificate weights too large");
        le.weight = scaled.get_si();
        for (auto& [cell, letter] : pe.reqs)
            le.reqs.push_back({cell_index[cell], letter});
        s.entries.push_back(std::move(le));
    }
    s.cell_entries.resize(s.n_cells);
    long total = 0;
    for (int e = 0; e < static_cast<int>(s.entries.size()); ++e) {
        total += s.entries[e].weight;
        for (auto [cell, letter] : s.entries[e].reqs)
            s.cell_entries[cell].push_back({e, letter});
    }

    if (strategy == EnumStrategy::BranchAndBound) {
        // decide heavy cells first so falsified weight accumulates quickly
        std::vector<long> incident(s.n_cells, 0);
        for (const LocalEntry& le : s.entries)
            for (auto [cell, letter] : le.reqs)
                incident[cell] += le.weight;
        std::vector<int> order(s.n_cells);
        for (int i = 0; i < s.n_cells; ++i)
            order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return incident[a] > incident[b]; });
        std::vector<int> rank(s.n_cells);
        for (int i = 0; i < s.n_cells; ++i)
            rank[order[i]] = i;
        std::vector<Point> reordered(s.n_cells, Point{});
        for (int i = 0; i < s.n_cells; ++i)
            reordered[rank[i]] = cells[i];
        cells = reordered;
        auto reordered_incidence =
            std::vector<std::vector<std::pair<int, char>>>(s.n_cells);
        for (int i = 0; i < s.n_cells; ++i)
            reordered_incidence[rank[i]] = std::move(s.cell_entries[i]);
        s.cell_entries = std::move(reordered_incidence);
        for (LocalEntry& le : s.entries)
            for (auto& [cell, letter] : le.reqs)
                cell = rank[cell];
    }
    s.bnb = (strategy == EnumStrategy::BranchAndBound);
    s.budget = node_budget;
    s.assignment.assign(s.n_cells, s.letters.empty() ? 'A' : s.letters[0]);
    s.remaining.resize(s.entries.size());
    for (std::size_t e = 0; e < s.entries.size(); ++e)
        s.remaining[e] = static_cast<int>(s.entries[e].reqs.size());
    s.falsified.assign(s.entries.size(), 0);
    s.alive = total;
    s.undetermined = static_cast<long>(s.entries.size());
    s.run(0);

    ConditionIIReport rep;
    Rational max_found = baseline;
    if (s.best > 0)
        max_found += Rational(s.best) / Rational(denom_lcm);
    rep.max_found = max_found;
    rep.nodes = s.nodes;
    rep.complete = s.complete;
    if (s.complete)
        rep.ok = (max_found <= cert.M);
    for (int i = 0; i < s.n_cells && i < static_cast<int>(s.best_assignment.size()); ++i)
        rep.witness.push_back({cells[i], s.best_assignment[i]});
    return rep;
}

BoundReport certified_bound(const WeightCertificate& cert, EnumStrategy strategy,
                            long node_budget, const std::string& name) {
    ConditionIReport ci = check_condition_i(cert);
    if (!ci.ok) {
        std::string classes;
        for (auto& [j, q] : ci.per_class)
            classes += " class " + std::to_string(j) + " -> " + to_string(q);
        throw CertificateInvalidError(name + ": condition (i) failed, claimed K=" +
                                      to_string(cert.K) + "," + classes);
    }
    ConditionIIReport cii = check_condition_ii(cert, strategy, node_budget);
    if (!cii.complete)
        throw BudgetExceededError(name + ": condition (ii) enumeration budget exhausted; best so far " +
                                  to_string(cii.max_found));
    if (!*cii.ok) {
        std::ostringstream witness;
        for (auto& [p, c] : cii.witness) {
            witness << " (";
            for (std::size_t i = 0; i < p.size(); ++i)
                witness << (i ? "," : "") << p[i];
            witness << ")=" << c;
        }
        throw CertificateInvalidError(name + ": condition (ii) failed, max " +
                                      to_string(cii.max_found) + " > M=" +
                                      to_string(cert.M) + ", witness" + witness.str());
    }
    return BoundReport{cert.bound(), name};
}

WeightCertificate ab_power_certificate(int d) {
    if (d < 1 || d > 4)
        throw DomainError("d must be between 1 and 4");
    std::vector<CertEntry> entries;
    long n = 1L << d;
    for (long mask = 0; mask < n; ++mask) {
        Point p(d);
        for (int i = 0; i < d; ++i)
            p[i] = mask >> i & 1;
        for (const Point& v : directions(d)) {
            bool inside = true;
            for (int i = 0; i < d; ++i)
                if (p[i] + v[i] < 0 || p[i] + v[i] > 1)
                    inside = false;
            if (!inside)
                continue;
            entries.push_back(CertEntry{p, v, Rational(1L << weight_class(v))});
        }
    }
    long pow3 = 1;
    for (int i = 0; i < d - 1; ++i)
        pow3 *= 3;
    return WeightCertificate{Word("AB"), d,       entries, Rational(n),
                             Rational(pow3 * n),  std::nullopt, std::nullopt};
}

}  // namespace wordgrid
