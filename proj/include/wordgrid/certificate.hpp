#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wordgrid/grid.hpp"
#include "wordgrid/word.hpp"

namespace wordgrid {

struct CertEntry {
    Point p;
    Point v;
    Rational weight;
};

// A finitely supported weight function on (position, direction) pairs with
// claimed constants K and M. If every direction class sums (averaged over the
// class) to K and no grid collects more than M weight on matching pairs, then
// C_d(word) <= M/K.
struct WeightCertificate {
    Word word;
    int dim;
    std::vector<CertEntry> entries;
    Rational K, M;
    // When set, condition (ii) fixes every cell outside `window` to
    // `fixed_letter` and lets only window cells vary. The support must then
    // stay inside the window wherever the word letter differs from
    // fixed_letter, otherwise the restriction would be unsound.
    std::optional<char> fixed_letter;
    std::optional<std::vector<Point>> window;

    Rational bound() const { return M / K; }
};

WeightCertificate parse_certificate(std::istream& in);
WeightCertificate parse_certificate_file(const std::string& path);
std::string format_certificate(const WeightCertificate& cert);

struct ConditionIReport {
    std::map<int, Rational> per_class;  // class j -> (sum of weights) / |V_j|
    bool ok;
};

ConditionIReport check_condition_i(const WeightCertificate& cert);

enum class EnumStrategy { FullEnum, BranchAndBound };

struct ConditionIIReport {
    Rational max_found;  // best found; exact max when complete
    std::vector<std::pair<Point, char>> witness;
    std::optional<bool> ok;  // nullopt when the budget ran out
    long nodes = 0;
    bool complete = true;
};

ConditionIIReport check_condition_ii(const WeightCertificate& cert,
                                     EnumStrategy strategy,
                                     long node_budget = -1);

struct BoundReport {
    Rational value;
    std::string provenance;
};

BoundReport certified_bound(const WeightCertificate& cert,
                            EnumStrategy strategy = EnumStrategy::BranchAndBound,
                            long node_budget = -1,
                            const std::string& name = "certificate");

// The hypercube certificate for AB: weight 2^j on (p, v) whenever p and p+v
// both lie in {0,1}^d; K = 2^d, M = 3^(d-1) * 2^d, bound 3^(d-1).
WeightCertificate ab_power_certificate(int d);

}  // namespace wordgrid
