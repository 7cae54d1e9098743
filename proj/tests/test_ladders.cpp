// SPDX-License-Identifier: Apache-2.0
#include "bim/ladders.hpp"
#include "bim/submodules.hpp"
#include "doctest.h"

using namespace bim;

namespace {

Multiplicity K(const char* s) { return parse_multiplicity(s); }

std::vector<Vec> coords(const GradedBasis& amb, const std::vector<SpinorPoly>& fs) {
    std::vector<Vec> out;
    for (const auto& f : fs) out.push_back(amb.coordinates(f));
    return out;
}

// The two smallest admissible n for a case over a small k pool, with at least two k-triples each.
struct Sample {
    long n;
    Multiplicity k;
};

std::vector<Sample> samples(const LadderSpec& s) {
    const char* pool[] = {"1", "-1/2", "-3/2", "1/3", "-5/2", "2"};
    std::vector<Sample> out;
    std::vector<long> ns;
    for (long n = 0; n <= 9 && ns.size() < 2; ++n) {
        int found = 0;
        for (const char* a : pool)
            for (const char* b : pool)
                for (const char* c : pool) {
                    if (found >= 2) continue;
                    Multiplicity k{parse_rational(a), parse_rational(b), parse_rational(c)};
                    if (!ladder_applies(s, n, k)) continue;
                    out.push_back({n, k});
                    ++found;
                }
        if (found) ns.push_back(n);
    }
    return out;
}

}  // namespace

TEST_CASE("twelve families, three rotations") {
    CHECK(ladder_cases().size() == 12);
    for (const auto& lc : ladder_cases())
        for (int rot = 0; rot < 3; ++rot) {
            LadderSpec spec{lc.id, rot};
            auto ss = samples(spec);
            CHECK_MESSAGE(ss.size() >= 4, spec.str());
            for (const auto& s : ss) {
                Ladder L = build_ladder(spec, s.n, s.k);
                auto cert = verify_ladder(L);
                CHECK_MESSAGE(cert.ok(), spec.str() << " n=" << s.n << " k=" << s.k.str());
            }
        }
}

TEST_CASE("rotation matrix conjugates the Pauli matrices cyclically") {
    const Mat2& U = rotation_matrix();
    for (int a = 1; a <= 3; ++a) CHECK(U * Mat2::sigma(a) * U.inverse() == Mat2::sigma(a % 3 + 1));
    CHECK(U.pow(3) == -Mat2::identity());
    CHECK(rotate_poly(Poly::var(1), 1) == Poly::var(2));
    CHECK(rotate_poly(Poly::var(3, 2), 2) == Poly::var(2, 2));
    Multiplicity k = K("1,2,3");
    CHECK(rotate_source(k, 1)[1] == 2);
    CHECK(rotate_source(k, 2)[1] == 3);
}

TEST_CASE("smallest type I ladders") {
    Multiplicity one = K("1,1,1");
    Ladder L = build_ladder({"I.odd", 0}, 1, one);
    REQUIRE(L.elements.size() == 2);
    for (long i = 0; i <= 1; ++i) {
        const MatPoly& p = L.elements[i];
        Monomial lead{static_cast<int>(1 - i), static_cast<int>(i), 0};
        Mat2 c(p.at(0, 0).coeff(lead), p.at(0, 1).coeff(lead), p.at(1, 0).coeff(lead), p.at(1, 1).coeff(lead));
        CHECK_FALSE(c.det().is_zero());
        // A nonzero multiple of sigma_2 (even i) or sigma_1 (odd i).
        Mat2 base = Mat2::sigma(i % 2 ? 1 : 2);
        GaussRational s = c(0, 1) / base(0, 1);
        CHECK(c == s * base);
    }
    Ladder z = build_ladder({"I.even", 0}, 0, one);
    REQUIRE(z.elements.size() == 1);
    CHECK(z.elements[0] == MatPoly::tensor(Mat2::identity(), Poly(1)));
}

TEST_CASE("hypotheses are enforced") {
    Multiplicity k = K("-1/2,1,1");  // t1 = 1
    CHECK_THROWS_AS(build_ladder({"I.odd", 0}, 1, k), LadderError);
    CHECK_THROWS_AS(build_ladder({"I.odd", 0}, 2, K("1,1,1")), LadderError);  // parity
    CHECK_THROWS(build_ladder({"no.such", 0}, 1, k));
    CHECK_THROWS(build_ladder({"I.odd", 3}, 1, K("1,1,1")));
}

TEST_CASE("type IV lengths at the smallest admissible n") {
    Multiplicity k = K("-1/2,1,-3/2");  // t1 = 1, t3 = 3
    CHECK(build_ladder({"IV.x1x3.even", 0}, 4, k).elements.size() == 1);
    CHECK(build_ladder({"IV.x1x3.odd", 0}, 5, k).elements.size() == 2);
    CHECK_FALSE(ladder_applies({"IV.x1x3.odd", 0}, 3, k));
}

TEST_CASE("column families span M_n and give identical matrices") {
    for (const char* kt : {"1,1,1", "1/2,2,1/3", "-1/2,1,1"}) {
        Multiplicity k = K(kt);
        for (long n = 0; n <= 4; ++n) {
            LadderSpec spec{n % 2 ? "I.odd" : "I.even", 0};
            if (!ladder_applies(spec, n, k)) continue;
            Ladder L = build_ladder(spec, n, k);
            auto cols = column_split(L);
            MonogenicSpace M = compute_Mn(static_cast<int>(n), k);
            GradedBasis amb(static_cast<int>(n), kAllVars);
            auto c0 = coords(amb, cols[0]), c1 = coords(amb, cols[1]);
            std::vector<Vec> all = c0;
            all.insert(all.end(), c1.begin(), c1.end());
            CHECK(Subspace::span(amb.size(), all) == M.space);
            CHECK(all.size() == M.dim());
            ModuleMatrices m0 = induced_matrices(static_cast<int>(n), k, c0, {});
            ModuleMatrices m1 = induced_matrices(static_cast<int>(n), k, c1, {});
            CHECK(m0.g == m1.g);
        }
    }
}

TEST_CASE("high columns span the x2 submodule") {
    Multiplicity k = K("1,-3/2,2");  // t2 = 3
    for (long n : {3L, 4L, 5L}) {
        LadderSpec spec{n % 2 ? "I.odd" : "I.even", 0};
        Ladder L = build_ladder(spec, n, k);
        GradedBasis amb(static_cast<int>(n), kAllVars);
        auto hi0 = coords(amb, ladder_column(L, 0, 3, n));
        auto hi1 = coords(amb, ladder_column(L, 1, 3, n));
        std::vector<Vec> both = hi0;
        both.insert(both.end(), hi1.begin(), hi1.end());
        MonogenicSpace S = compute_submodule(static_cast<int>(n), k, {high(2)});
        CHECK(Subspace::span(amb.size(), both) == S.space);
        CHECK(induced_matrices(static_cast<int>(n), k, hi0, {}).g == induced_matrices(static_cast<int>(n), k, hi1, {}).g);
    }
}

TEST_CASE("lowering relation degenerates cleanly where phi vanishes") {
    // phi_1 = (1 + 2k2)(n + 2k1) is zero at k2 = -1/2.
    Ladder L = build_ladder({"I.odd", 0}, 3, K("1,-1/2,1"));
    CHECK(L.phi[1] == 0);
    CHECK(verify_ladder(L).ok());
}
