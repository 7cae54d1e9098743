// SPDX-License-Identifier: Apache-2.0
#include "bim/exact.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace bim;

TEST_CASE("rational literals parse to canonical form") {
    CHECK(to_string(parse_rational("-3/2")) == "-3/2");
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("+5")) == "5");
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK_THROWS(parse_rational("4/-2"));
}

TEST_CASE("malformed rationals are rejected") {
    CHECK_THROWS(parse_rational(""));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("a/2"));
    CHECK_THROWS(parse_rational("1.5"));
    CHECK_THROWS(parse_rational("1/2/3"));
}

TEST_CASE("gaussian literals") {
    CHECK(parse_gauss("i") == GaussRational::i());
    CHECK(parse_gauss("-i") == -GaussRational::i());
    CHECK(parse_gauss("1/2+3/4*i") == GaussRational(Rational(1, 2), Rational(3, 4)));
    CHECK(parse_gauss("-1/2-i") == GaussRational(Rational(-1, 2), Rational(-1)));
    CHECK(parse_gauss("2*i") == GaussRational(Rational(0), Rational(2)));
    CHECK(to_string(GaussRational(Rational(1, 2), Rational(-3))) == "1/2-3*i");
    CHECK(to_string(-GaussRational::i()) == "-i");
}

TEST_CASE("string format round-trips") {
    for (int t = 0; t < 300; ++t) {
        GaussRational z = gen::gauss();
        CHECK(parse_gauss(to_string(z)) == z);
        Rational q = gen::rational(1000, 997);
        CHECK(parse_rational(to_string(q)) == q);
    }
}

TEST_CASE("half powers of -1 use the +i branch") {
    CHECK(half_power_of_minus_one(0) == GaussRational(1));
    CHECK(half_power_of_minus_one(1) == GaussRational::i());
    CHECK(half_power_of_minus_one(2) == GaussRational(-1));
    CHECK(half_power_of_minus_one(3) == -GaussRational::i());
    CHECK(half_power_of_minus_one(-1) == -GaussRational::i());
    CHECK(half_power_of_minus_one(-2) == GaussRational(-1));
    for (long h = -9; h <= 9; ++h)
        CHECK(half_power_of_minus_one(h) * half_power_of_minus_one(h) == GaussRational(sign_pow(h)));
}

TEST_CASE("field axioms on random samples") {
    for (int t = 0; t < 200; ++t) {
        GaussRational a = gen::gauss(), b = gen::gauss(), c = gen::gauss();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a.conj().conj() == a);
        if (!a.is_zero()) CHECK(a * a.inverse() == GaussRational(1));
    }
    CHECK(GaussRational::i() * GaussRational::i() == GaussRational(-1));
}

TEST_CASE("Pauli relations") {
    const Mat2 I = Mat2::identity();
    const GaussRational i = GaussRational::i();
    for (int a = 1; a <= 3; ++a) {
        CHECK(Mat2::sigma(a) * Mat2::sigma(a) == I);
        CHECK(mat2_anticommutator(Mat2::sigma(a), Mat2::sigma(a)) == 2 * I);
        for (int b = 1; b <= 3; ++b)
            if (a != b) CHECK(mat2_anticommutator(Mat2::sigma(a), Mat2::sigma(b)).is_zero());
    }
    CHECK(Mat2::sigma(1) * Mat2::sigma(2) == i * Mat2::sigma(3));
    CHECK(Mat2::sigma(2) * Mat2::sigma(3) == i * Mat2::sigma(1));
    CHECK(Mat2::sigma(3) * Mat2::sigma(1) == i * Mat2::sigma(2));
    // sigma_2 carries the entries -i and i.
    CHECK(Mat2::sigma(2)(0, 1) == half_power_of_minus_one(3));
    CHECK(Mat2::sigma(2)(1, 0) == half_power_of_minus_one(1));
}

TEST_CASE("anticommutator is symmetric and identity case doubles") {
    for (int t = 0; t < 100; ++t) {
        Mat2 A = gen::mat2(), B = gen::mat2();
        CHECK(mat2_anticommutator(A, B) == mat2_anticommutator(B, A));
        CHECK(mat2_anticommutator(Mat2::identity(), A) == 2 * A);
    }
}
