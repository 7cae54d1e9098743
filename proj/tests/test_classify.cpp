// SPDX-License-Identifier: Apache-2.0
#include "bim/classify.hpp"
#include "doctest.h"
#include "gen.hpp"

#include <set>

using namespace bim;

namespace {

Multiplicity K(const char* s) { return parse_multiplicity(s); }

void require_ok(const ClassificationCertificate& cert) {
    for (const auto& f : cert.factors)
        for (const auto& s : f.failures) FAIL_CHECK(f.name << ": " << s);
    for (const auto& c : cert.composites)
        for (const auto& s : c.failures) FAIL_CHECK(c.name << ": " << s);
    for (const auto& f : cert.filtrations) CHECK_MESSAGE(f.ok(), f.chain);
    CHECK(cert.ok());
}

// Independent kernel dimension: nullity of the full Dirac matrix.
std::size_t dirac_nullity(int n, const Multiplicity& k) {
    GradedBasis dom(n, kAllVars);
    if (n == 0) return dom.size();
    GradedBasis cod(n - 1, kAllVars);
    Matrix D = matrix_of_operator([&](const SpinorPoly& f) { return apply_dirac(f, k); }, dom, cod);
    return dom.size() - rank(D);
}

}  // namespace

TEST_CASE("type I even at n = 2, k = (1,1,1)") {
    auto r = classify(2, K("1,1,1"));
    CHECK(r.info.type == CaseType::I);
    CHECK(r.subcase == "I.even");
    REQUIRE(r.factors.size() == 1);
    const auto& f = r.factors[0];
    CHECK(f.multiplicity == 2);
    CHECK(f.spec == make_spec(Family::O, 2, frac(7, 2), frac(-7, 2), frac(-7, 2), TwistElement::parse("(1,-1)")));
    CHECK(r.nonneg_holds);
    CHECK(f.isomorph == make_spec(Family::O, 2, frac(7, 2), frac(7, 2), frac(7, 2)));
    auto cert = verify_classification(r);
    require_ok(cert);
    // Parameters 5/2 give different central scalars.
    const auto wrong = make_spec(Family::O, 2, frac(5, 2), frac(5, 2), frac(5, 2));
    CHECK(spec_central(wrong) != spec_central(f.isomorph));
    CHECK(cert.factors[0].criterion);
    CHECK(cert.factors[0].burnside == std::optional<bool>(true));
}

TEST_CASE("type I odd at n = 1: trace of X on each copy is -1") {
    auto r = classify(1, K("1,1,1"));
    CHECK(r.subcase == "I.odd");
    CHECK(r.factors[0].spec == make_spec(Family::E, 1, 3, -3, 3));
    CHECK(spec_traces(r.factors[0].spec)[0] == GaussRational(-1));
    require_ok(verify_classification(r));
}

TEST_CASE("type IV odd at n = 5, k = (-1/2,-3/2,-1/2)") {
    auto r = classify(5, K("-1/2,-3/2,-1/2"));
    CHECK(r.info.type == CaseType::IV);
    CHECK(r.subcase == "IV.odd");
    REQUIRE(r.factors.size() == 4);
    CHECK(r.factors[0].name() == "M123");
    CHECK(r.factors[0].spec == make_spec(Family::O, 0, frac(5, 2), frac(3, 2), frac(5, 2)));
    // -K - n - 1 = 5/2 - 6
    const Rational s = frac(-7, 2);
    CHECK(r.factors[1].spec == make_spec(Family::O, 0, s, frac(-1, 2), frac(-3, 2)));
    CHECK(r.factors[2].spec == make_spec(Family::O, 2, frac(-1, 2), s, frac(-1, 2)));
    CHECK(r.factors[3].spec == make_spec(Family::O, 0, frac(-3, 2), frac(-1, 2), s));
    CHECK(r.composites.size() == 3);
    auto cert = verify_classification(r);
    require_ok(cert);
    for (const auto& f : cert.factors) {
        CHECK(f.hypothesis);
        CHECK(f.criterion);
    }
}

TEST_CASE("gap at n = 3, k = (-1/2,-3/2,-1/2) reports brute-force dimensions only") {
    const auto k = K("-1/2,-3/2,-1/2");
    auto r = classify(3, k);
    CHECK(r.info.type == CaseType::Gap);
    CHECK_FALSE(r.has_prediction());
    CHECK(r.factors.empty());
    CHECK(r.dim_M == dirac_nullity(3, k));
    CHECK_THROWS_AS(verify_classification(r), std::invalid_argument);
}

TEST_CASE("type III odd: three layers over M1 cap M3") {
    auto r = classify(3, K("-1/2,0,-1/2"));
    CHECK(r.subcase == "III.x1x3.odd");
    std::set<std::string> names;
    for (const auto& f : r.factors) names.insert(f.name());
    CHECK(names == std::set<std::string>{"M13", "M1/M13", "M/M3", "M3/M13", "M/M1"});
    auto cert = verify_classification(r);
    require_ok(cert);
    CHECK(cert.filtrations.size() == 2);
}

TEST_CASE("n = 0: scalar action equals the predicted twisted O_0 traces") {
    for (int rep = 0; rep < 12; ++rep) {
        const auto k = gen::multiplicity();
        auto r = classify(0, k);
        REQUIRE(r.subcase == "I.even");
        const auto tr = spec_traces(r.factors[0].spec);
        const Rational half = frac(1, 2);
        CHECK(tr[0] == GaussRational(half + k[2] + k[3]));
        CHECK(tr[1] == GaussRational(half + k[3] + k[1]));
        CHECK(tr[2] == GaussRational(half + k[1] + k[2]));
        require_ok(verify_classification(r));
    }
}

TEST_CASE("one-dimensional factors can hide the cycle convention") {
    auto r = classify(2, K("-1/2,-5/2,-5/2"));
    CHECK(r.subcase == "II.x1.even");
    auto cert = verify_classification(r);
    require_ok(cert);
    for (const auto& f : cert.factors) {
        CHECK(f.alternate_differs);
        CHECK(f.ambiguous() == (f.expected_dim == 2));
    }
}

TEST_CASE("property: every predicted point verifies and filtrations add up") {
    int checked = 0;
    for (int rep = 0; rep < 150; ++rep) {
        const long n = gen::integer(0, 5);
        const auto k = gen::multiplicity();
        auto r = classify(n, k);
        CHECK(r.dim_M == dirac_nullity(static_cast<int>(n), k));
        if (!r.has_prediction()) continue;
        CHECK(r.dim_formula_applies);
        CHECK(static_cast<long>(r.dim_M) == r.dim_predicted);
        INFO("n=" << n << " k=" << k.str());
        require_ok(verify_classification(r));
        ++checked;
    }
    CHECK(checked > 80);
}
