#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "wordgrid/certificate.hpp"
#include "wordgrid/errors.hpp"

using namespace wordgrid;

static const std::string kDataDir = WORDGRID_DATA_DIR;

static WeightCertificate load(const std::string& name) {
    return parse_certificate_file(kDataDir + "/" + name);
}

TEST_CASE("certificate files parse and round trip") {
    for (const char* name : {"fig2-ab.cert", "fig3-abb.cert", "fig4-abcc.cert",
                             "fig6-babbb.cert", "fig8-abbb.cert"}) {
        CAPTURE(name);
        WeightCertificate cert = load(name);
        std::istringstream round(format_certificate(cert));
        WeightCertificate again = parse_certificate(round);
        CHECK(again.word == cert.word);
        CHECK(again.K == cert.K);
        CHECK(again.M == cert.M);
        CHECK(again.entries.size() == cert.entries.size());
        CHECK(check_condition_i(again).ok);
    }
}

TEST_CASE("full enumeration bounds") {
    BoundReport r = certified_bound(load("fig2-ab.cert"), EnumStrategy::FullEnum);
    CHECK(r.value == 3);
    r = certified_bound(load("fig3-abb.cert"), EnumStrategy::FullEnum);
    CHECK(r.value == 2);
}

TEST_CASE("branch and bound bounds") {
    CHECK(certified_bound(load("fig4-abcc.cert")).value == frac(6, 5));
    CHECK(certified_bound(load("fig6-babbb.cert")).value == frac(8, 5));
}

TEST_CASE("the ABBB certificate certifies 59526/35459") {
    WeightCertificate cert = load("fig8-abbb.cert");
    CHECK(cert.bound() == frac(59526, 35459));
    CHECK(certified_bound(cert).value == frac(59526, 35459));
}

// fig4 is excluded: without a window its support spans too many free cells
// for plain enumeration, which is exactly what branch and bound is for
TEST_CASE("strategies agree") {
    for (const char* name : {"fig2-ab.cert", "fig3-abb.cert"}) {
        CAPTURE(name);
        WeightCertificate cert = load(name);
        ConditionIIReport full = check_condition_ii(cert, EnumStrategy::FullEnum);
        ConditionIIReport bnb =
            check_condition_ii(cert, EnumStrategy::BranchAndBound);
        CHECK(full.max_found == bnb.max_found);
        CHECK(bnb.nodes <= full.nodes);
    }
}

TEST_CASE("witness assignments reproduce the maximum") {
    WeightCertificate cert = load("fig3-abb.cert");
    ConditionIIReport r = check_condition_ii(cert, EnumStrategy::FullEnum);
    REQUIRE(r.ok.has_value());
    // replay the witness by hand: sum the weights of entries it matches
    Rational matched = 0;
    auto letter_at = [&](const Point& q) {
        for (auto& [p, c] : r.witness)
            if (p == q)
                return c;
        return cert.fixed_letter.value();
    };
    for (const CertEntry& e : cert.entries) {
        bool hit = true;
        Point q = e.p;
        for (std::size_t i = 0; i < cert.word.size() && hit; ++i) {
            if (letter_at(q) != cert.word[static_cast<std::size_t>(i)])
                hit = false;
            for (std::size_t c = 0; c < q.size(); ++c)
                q[c] += e.v[c];
        }
        if (hit)
            matched += e.weight;
    }
    CHECK(matched == r.max_found);
}

TEST_CASE("condition (i) failures are caught") {
    WeightCertificate cert = load("fig2-ab.cert");
    cert.K = 2;
    CHECK_FALSE(check_condition_i(cert).ok);
    CHECK_THROWS_AS(certified_bound(cert), CertificateInvalidError);
}

TEST_CASE("condition (ii) failures are caught") {
    WeightCertificate cert = load("fig2-ab.cert");
    cert.M = 2;  // true max is 3
    CHECK_THROWS_AS(certified_bound(cert, EnumStrategy::FullEnum),
                    CertificateInvalidError);
}

TEST_CASE("support escaping the window is unsound and rejected") {
    WeightCertificate cert = load("fig3-abb.cert");
    // an entry whose A-position leaves the window cannot be checked under the
    // fixed-letter restriction
    cert.entries.push_back({{5, 5}, {1, 0}, 1});
    CHECK_THROWS_AS(check_condition_ii(cert, EnumStrategy::FullEnum),
                    CertificateInvalidError);
}

TEST_CASE("budget exhaustion surfaces as exit-worthy error") {
    WeightCertificate cert = load("fig6-babbb.cert");
    ConditionIIReport r =
        check_condition_ii(cert, EnumStrategy::BranchAndBound, 5);
    CHECK_FALSE(r.complete);
    CHECK_FALSE(r.ok.has_value());
    CHECK_THROWS_AS(certified_bound(cert, EnumStrategy::BranchAndBound, 5),
                    BudgetExceededError);
}

TEST_CASE("parse errors") {
    auto bad = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_certificate(in), ParseError);
    };
    bad("");
    bad("word: AB\n");                               // missing dim/K/M
    bad("word: AB\ndim: 2\nK: 1\nM: 3\n0 0 2 0 1\n");  // direction out of range
    bad("word: AB\ndim: 2\nK: 1\nM: 3\n0 0 0 0 1\n");  // zero direction
    // syntactically fine but semantically invalid claims
    auto invalid = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_certificate(in), CertificateInvalidError);
    };
    invalid("word: AB\ndim: 2\nK: 1\nM: 3\n0 0 1 0 -1\n");  // negative weight
    invalid("word: AB\ndim: 2\nK: 0\nM: 3\n0 0 1 0 1\n");   // K must be positive
    // window without a fixed letter is meaningless
    bad("word: AB\ndim: 1\nK: 1\nM: 3\nwindow: 0; 1\n0 1 1\n");
}

TEST_CASE("hypercube certificate family") {
    for (int d = 1; d <= 3; ++d) {
        WeightCertificate cert = ab_power_certificate(d);
        CAPTURE(d);
        CHECK(check_condition_i(cert).ok);
        Rational expect = 1;
        for (int i = 1; i < d; ++i)
            expect *= 3;
        CHECK(certified_bound(cert, EnumStrategy::FullEnum).value == expect);
    }
}
