// SPDX-License-Identifier: Apache-2.0
#include "bim/poly.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace bim;

TEST_CASE("two-variable basis reproduces alpha_n") {
    GradedBasis b = enumerate_basis(1, 0b011);
    REQUIRE(b.size() == 4);
    CHECK(b[0] == BasisElement{0, {0, 1, 0}});
    CHECK(b[1] == BasisElement{0, {1, 0, 0}});
    CHECK(b[2] == BasisElement{1, {0, 1, 0}});
    CHECK(b[3] == BasisElement{1, {1, 0, 0}});
    GradedBasis b3 = enumerate_basis(3, 0b011);
    for (int i = 0; i <= 3; ++i) CHECK(b3[i].mono == Monomial{i, 3 - i, 0});
}

TEST_CASE("three-variable basis sizes and order") {
    CHECK(enumerate_basis(0, kAllVars).size() == 2);
    CHECK(enumerate_basis(3, kAllVars).size() == 20);
    for (int n = 0; n <= 6; ++n) CHECK(enumerate_basis(n, kAllVars).size() == std::size_t((n + 1) * (n + 2)));
    GradedBasis b = enumerate_basis(2, kAllVars);
    CHECK(b[0].mono == Monomial{2, 0, 0});
    CHECK(b[1].mono == Monomial{1, 1, 0});
    CHECK(b[2].mono == Monomial{1, 0, 1});
    CHECK(b[3].mono == Monomial{0, 2, 0});
    CHECK(b[6].slot == 1);
    CHECK_THROWS(enumerate_basis(2, 0));
}

TEST_CASE("coordinates of simple spinors") {
    GradedBasis b1 = enumerate_basis(1, kAllVars);
    Vec e = b1.coordinates({Poly::var(1), Poly()});
    CHECK(e[b1.index_of(0, {1, 0, 0})] == GaussRational(1));
    GradedBasis b2 = enumerate_basis(2, kAllVars);
    Vec z = b2.coordinates({});
    for (const auto& x : z) CHECK(x.is_zero());
    Vec w = b2.coordinates({Poly(), Poly::monomial({0, 1, 1}, GaussRational::i())});
    int nonzero = 0;
    for (const auto& x : w) nonzero += !x.is_zero();
    CHECK(nonzero == 1);
    CHECK(w[b2.index_of(1, {0, 1, 1})] == GaussRational::i());
    CHECK_THROWS(b2.coordinates({Poly::var(1), Poly()}));
    CHECK_THROWS(enumerate_basis(1, 0b011).coordinates({Poly::var(3), Poly()}));
}

TEST_CASE("coordinates and reconstruct are inverse") {
    for (int t = 0; t < 50; ++t) {
        int n = static_cast<int>(gen::integer(0, 5));
        GradedBasis b = enumerate_basis(n, kAllVars);
        SpinorPoly f = gen::spinor(n, 4);
        CHECK(b.reconstruct(b.coordinates(f)) == f);
        Vec v(b.size());
        for (auto& x : v)
            if (gen::integer(0, 2) == 0) x = gen::gauss();
        CHECK(b.coordinates(b.reconstruct(v)) == v);
    }
}

TEST_CASE("polynomial ring laws on random instances") {
    for (int t = 0; t < 60; ++t) {
        Poly a = gen::poly(2, 3), b = gen::poly(3, 3), c = gen::poly(1, 2);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        Poly ab = a * b;
        for (const auto& [m, _] : ab.terms()) CHECK(degree(m) == 5);
    }
}

TEST_CASE("Mat2 acts on MatPoly by left multiplication, columns are spinors") {
    Poly p = Poly::var(1) + Poly::var(2, 2);
    MatPoly m = MatPoly::tensor(Mat2::sigma(2), p);
    CHECK(m.column(0).down == p * GaussRational::i());
    CHECK((Mat2::sigma(2) * m) == MatPoly::tensor(Mat2::identity(), p));
    SpinorPoly s{Poly::var(3), Poly::var(1)};
    CHECK(Mat2::sigma(1) * s == SpinorPoly{Poly::var(1), Poly::var(3)});
}

TEST_CASE("text format") {
    Poly p = Poly::monomial({1, 0, 2}, Rational(3, 2)) - Poly::var(2, 3);
    CHECK(to_string(p) == "3/2*x1^1*x3^2 - 1*x2^3");
    CHECK(to_string(SpinorPoly{Poly(1), Poly()}) == "{up: 1, down: 0}");
}
