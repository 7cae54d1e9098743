// SPDX-License-Identifier: Apache-2.0
#include "bim/bi_action.hpp"
#include "bim/submodules.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace bim;

namespace {

ModuleMatrices on_Mn(int n, const Multiplicity& k) {
    MonogenicSpace M = compute_Mn(n, k);
    return matrices_on(n, k, M.space, Subspace(M.ambient.size()));
}

GaussRational gq(const Rational& r) { return GaussRational(r); }

}  // namespace

TEST_CASE("generators on the constant spinor") {
    Multiplicity k{Rational(1, 3), Rational(-5, 2), 7};
    SpinorPoly up{Poly(1), Poly()};
    CHECK(apply_XYZ(1, up, k) == gq(Rational(1, 2) + k[2] + k[3]) * up);
    CHECK(apply_XYZ(2, up, k) == gq(Rational(1, 2) + k[3] + k[1]) * up);
    CHECK(apply_XYZ(3, up, k) == gq(Rational(1, 2) + k[1] + k[2]) * up);
    ModuleMatrices m0 = on_Mn(0, k);
    CHECK(m0.X() == gq(Rational(1, 2) + k[2] + k[3]) * Matrix::identity(2));
    CHECK_THROWS(apply_XYZ(4, up, k));
}

TEST_CASE("generators preserve degree and commute with D up to the kernel") {
    for (int trial = 0; trial < 20; ++trial) {
        Multiplicity k = gen::multiplicity();
        int n = static_cast<int>(trial % 4);
        MonogenicSpace M = compute_Mn(n, k);
        for (const auto& f : M.elements())
            for (int w = 1; w <= 3; ++w) {
                SpinorPoly g = apply_XYZ(w, f, k);
                CHECK(apply_dirac(g, k).is_zero());
                CHECK(M.space.contains(M.ambient.coordinates(g)));
            }
    }
}

TEST_CASE("central scalar closed form") {
    Multiplicity one{1, 1, 1};
    CHECK(predicted_central_scalars(1, one)[0] == -8);
    CHECK(predicted_central_scalars(2, one)[0] == 14);
    for (long n = 0; n < 5; ++n)
        for (const auto& s : predicted_central_scalars(n, Multiplicity{0, 0, 0})) CHECK(s == 0);
}

TEST_CASE("relations and scalars on M_n over a grid") {
    const char* ks[] = {"0,0,0", "1,1,1", "-1/2,-3/2,-1/2", "-3/2,1,2/3", "1/2,-5/2,1", "-1/2,-1/2,-1/2"};
    for (const char* kt : ks) {
        Multiplicity k = parse_multiplicity(kt);
        for (int n = 0; n <= 5; ++n) {
            ModuleMatrices m = on_Mn(n, k);
            auto cert = verify_bi_relations(m, predicted_central_scalars(n, k));
            CHECK_MESSAGE(cert.ok(), "k=" << kt << " n=" << n);
        }
    }
    Multiplicity one{1, 1, 1};
    auto c1 = verify_bi_relations(on_Mn(1, one), predicted_central_scalars(1, one));
    REQUIRE(c1.scalars[0].computed);
    CHECK(*c1.scalars[0].computed == gq(-8));
}

TEST_CASE("submodule closure and size") {
    Multiplicity k{1, Rational(-3, 2), 2};
    for (int n = 3; n <= 5; ++n) {
        MonogenicSpace S = compute_submodule(n, k, {high(2)});
        ModuleMatrices m = matrices_on(n, k, S.space, Subspace(S.ambient.size()));
        CHECK(m.dim() == static_cast<std::size_t>(2 * (n - 3 + 1)));
        CHECK(verify_bi_relations(m, predicted_central_scalars(n, k)).ok());
    }
    Multiplicity k3{Rational(-1, 2), Rational(-3, 2), Rational(-1, 2)};
    const int n = 5;
    MonogenicSpace M = compute_Mn(n, k3);
    std::vector<std::vector<SubmoduleFilter>> named = {{high(1)}, {high(2)}, {high(3)}, {high(1), high(2)},
                                                       {high(2), high(3)}, {high(1), high(3)}, {high(1), high(2), high(3)}};
    for (const auto& fs : named) {
        MonogenicSpace S = compute_submodule(n, k3, fs);
        ModuleMatrices sub = matrices_on(n, k3, S.space, Subspace(S.ambient.size()));
        CHECK(verify_bi_relations(sub, predicted_central_scalars(n, k3)).ok());
        ModuleMatrices quo = matrices_on(n, k3, M.space, S.space);
        CHECK(quo.dim() == M.dim() - S.dim());
        CHECK(verify_bi_relations(quo, predicted_central_scalars(n, k3)).ok());
    }
}

TEST_CASE("non-invariant span is reported") {
    Multiplicity k{1, 1, 1};
    GradedBasis amb(1, kAllVars);
    Vec v(amb.size());
    v[0] = 1;  // up (x) x1 alone is not monogenic, so not closed
    CHECK_THROWS_AS(induced_matrices(1, k, {v}, {}), ClosureFailure);
}

TEST_CASE("twist group table") {
    auto all = TwistElement::all();
    CHECK(all.size() == 24);
    for (const auto& g : all) {
        CHECK(g * TwistElement::identity() == g);
        CHECK(g * g.inverse() == TwistElement::identity());
        CHECK(TwistElement::parse(g.str()) == g);
        for (const auto& h : all)
            for (const auto& l : all) CHECK((g * h) * l == g * (h * l));
    }
    CHECK(TwistElement::parse("(1 2 3)").perm() == std::array<int, 3>{2, 3, 1});
    CHECK(TwistElement::parse("((-1,-1),(1 2 3))").eps() == std::array<int, 2>{-1, -1});
    CHECK(TwistElement::parse("id") == TwistElement::identity());
    CHECK(TwistElement::parse("(1,-1)").perm() == std::array<int, 3>{1, 2, 3});
    CHECK_THROWS(TwistElement::parse("(1 1)"));
    CHECK_THROWS(TwistElement::parse("(2,1)"));
    CHECK_THROWS(TwistElement::parse("banana"));
}

TEST_CASE("sign automorphisms conjugated by permutations") {
    // pi eps pi^{-1} is again a sign automorphism, permuted accordingly.
    for (const auto& p : TwistElement::all()) {
        if (p.eps() != std::array<int, 2>{1, 1}) continue;
        for (const auto& e : TwistElement::all()) {
            if (e.perm() != std::array<int, 3>{1, 2, 3}) continue;
            TwistElement c = p * e * p.inverse();
            CHECK(c.perm() == std::array<int, 3>{1, 2, 3});
            for (int i = 1; i <= 3; ++i) CHECK(c.sign(p.image(i)) == e.sign(i));
        }
    }
}

TEST_CASE("twist rows on generators and central elements") {
    Multiplicity k{Rational(1, 2), Rational(-3, 2), 2};
    ModuleMatrices m = on_Mn(3, k);
    auto s = predicted_central_scalars(3, k);
    std::array<GaussRational, 3> c{gq(s[0]), gq(s[1]), gq(s[2])};

    ModuleMatrices a = twist(m, TwistElement::parse("(1,-1)"));
    CHECK(a.X() == m.X());
    CHECK(a.Y() == -m.Y());
    CHECK(a.Z() == -m.Z());
    auto ca = twist_central(c, TwistElement::parse("(1,-1)"));
    CHECK(ca[0] == -c[0]);
    CHECK(ca[1] == c[1]);
    CHECK(ca[2] == -c[2]);

    ModuleMatrices b = twist(m, TwistElement::parse("(1 2)"));
    CHECK(b.X() == m.Y());
    CHECK(b.Y() == m.X());
    CHECK(b.Z() == m.Z());
    auto cb = twist_central(c, TwistElement::parse("(1 2)"));
    CHECK(cb[0] == c[0]);
    CHECK(cb[1] == c[2]);
    CHECK(cb[2] == c[1]);

    CHECK(twist(m, TwistElement::identity()).g == m.g);

    for (const auto& g : TwistElement::all()) {
        ModuleMatrices t = twist(m, g);
        auto ct = twist_central(c, g);
        for (int j = 0; j < 3; ++j) {
            const Central cs[3] = {Central::Kappa, Central::Lambda, Central::Mu};
            CHECK(central_element(t, cs[j]) == ct[j] * Matrix::identity(t.dim()));
            for (const auto& G : t.g) CHECK(commutator(central_element(t, cs[j]), G).is_zero());
        }
        std::array<GaussRational, 3> tr{m.X().trace(), m.Y().trace(), m.Z().trace()};
        auto tt = twist_traces(tr, g);
        CHECK(tt[0] == t.X().trace());
        CHECK(tt[1] == t.Y().trace());
        CHECK(tt[2] == t.Z().trace());
        for (const auto& h : TwistElement::all()) CHECK(twist(twist(m, g), h).g == twist(m, g * h).g);
    }
}
