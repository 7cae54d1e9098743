// SPDX-License-Identifier: Apache-2.0
#include "bim/linalg.hpp"
#include "bim/dunkl.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace bim;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, int zero_bias) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (gen::integer(0, zero_bias) == 0) m(i, j) = gen::gauss();
    return m;
}

// Oracle rank: plain Gauss-Jordan over Q(i) with fractions at every step.
std::size_t naive_rank(Matrix m) {
    std::size_t rk = 0;
    for (std::size_t c = 0; c < m.cols() && rk < m.rows(); ++c) {
        std::size_t p = rk;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(rk, j), m(p, j));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rk || m(r, c).is_zero()) continue;
            GaussRational f = m(r, c) / m(rk, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) -= f * m(rk, j);
        }
        ++rk;
    }
    return rk;
}

}  // namespace

TEST_CASE("trivial nullspaces") {
    CHECK(nullspace(Matrix::identity(4)).empty());
    CHECK(nullspace(Matrix(2, 3)).size() == 3);
    CHECK(rank(Matrix::identity(5)) == 5);
}

TEST_CASE("rank agrees with naive elimination and nullspace is a certificate") {
    for (int t = 0; t < 120; ++t) {
        std::size_t r = gen::integer(1, 7), c = gen::integer(1, 7);
        Matrix m = random_matrix(r, c, static_cast<int>(gen::integer(0, 3)));
        // Inject dependent rows sometimes.
        if (r > 2 && gen::integer(0, 1))
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * GaussRational(3) - m(1, j);
        std::size_t rk = rank(m);
        CHECK(rk == naive_rank(m));
        auto ns = nullspace(m);
        CHECK(ns.size() + rk == c);
        for (const auto& v : ns) CHECK(is_zero(m * v));
        CHECK(Subspace::span(c, ns).dim() == ns.size());
    }
}

TEST_CASE("elimination is deterministic") {
    Matrix m = random_matrix(6, 8, 1);
    auto a = nullspace(m), b = nullspace(m);
    CHECK(a == b);
}

TEST_CASE("subspace coordinates, sums and intersections") {
    Vec e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    Subspace a = Subspace::span(3, {e1, e2}), b = Subspace::span(3, {e2, e3});
    CHECK(a.intersect(b).dim() == 1);
    CHECK(a.intersect(b).contains(e2));
    CHECK(a.sum(b).dim() == 3);
    CHECK(!a.contains(e3));
    auto c = a.coordinates(Vec{2, GaussRational::i(), 0});
    REQUIRE(c);
    CHECK((*c)[1] == GaussRational::i());
    for (int t = 0; t < 40; ++t) {
        Matrix m = random_matrix(5, 7, 1);
        Subspace s = Subspace::span(7, {m.row(0), m.row(1), m.row(2)});
        Vec v(7);
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 7; ++k) v[k] += GaussRational(long(j) + 1) * m(j, k);
        CHECK(s.contains(v));
    }
}

TEST_CASE("operator matrices") {
    GradedBasis b = enumerate_basis(2, kAllVars);
    CHECK(matrix_of_operator([](const SpinorPoly& f) { return f; }, b, b) == Matrix::identity(b.size()));
    CHECK(matrix_of_operator([](const SpinorPoly&) { return SpinorPoly{}; }, b, b).is_zero());
    Multiplicity k{1, 1, 1};
    Matrix D = matrix_of_operator([&](const SpinorPoly& f) { return apply_dirac(f, k); }, b,
                                  enumerate_basis(1, kAllVars));
    CHECK(nullspace(D).size() == 6);
}
