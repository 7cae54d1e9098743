// SPDX-License-Identifier: Apache-2.0
#include "bim/structured.hpp"

#include <stdexcept>

namespace bim {

namespace {

constexpr VarSet kX12 = 0b011;

// diag(I_n, A_n)
Matrix sign_block(long n) {
    Matrix m(2 * n, 2 * n);
    m.set_block(0, 0, Matrix::identity(n));
    m.set_block(n, n, build_An(n));
    return m;
}

}  // namespace

Matrix build_An(long n) {
    Matrix a(n, n);
    for (long i = 1; i <= n; ++i) a(i - 1, i - 1) = sign_pow(n - i);
    return a;
}

Matrix build_Nn(long n, const Multiplicity& k) {
    if (n < 1) throw std::invalid_argument("N_n needs n >= 1");
    Matrix m(n, n + 1);
    for (long i = 1; i <= n; ++i) {
        m(i - 1, i - 1) = half_power_of_minus_one(2 * (n - i) + 1) * GaussRational(m_value(2, n + 1 - i, k));
        m(i - 1, i) = GaussRational(sign_pow(n - i)) * GaussRational(m_value(1, i, k));
    }
    return m;
}

long rank_Nn_expected(long n, const Multiplicity& k) {
    Threshold t1 = k.t(1), t2 = k.t(2);
    if (le(max(t1, t2), n) && lt(n, t1 + t2)) return n - 1;
    return n;
}

SpinorPoly apply_dirac_x3(const SpinorPoly& f, const Multiplicity& k) { return apply_dirac(f, k, 3); }

Matrix dirac_x3_power_direct(long n, const Multiplicity& k, long power) {
    if (power < 1 || power > n) throw std::invalid_argument("power must satisfy 1 <= power <= n");
    GradedBasis dom(static_cast<int>(n), kX12), cod(static_cast<int>(n - power), kX12);
    return matrix_of_operator(
        [&](const SpinorPoly& f) {
            SpinorPoly g = f;
            for (long p = 0; p < power; ++p) g = apply_dirac_x3(g, k);
            return g;
        },
        dom, cod);
}

Matrix dirac_x3_power_matrix(long n, const Multiplicity& k, long power) {
    if (power < 1 || power > n) throw std::invalid_argument("power must satisfy 1 <= power <= n");
    const long lo = n - power + 1;
    Matrix P = build_Nn(lo, k);
    for (long m = lo + 1; m <= n; ++m) P = P * build_Nn(m, k);
    // An odd number of antidiagonal factors stays antidiagonal; A_m^2 = I cancels in between.
    Matrix mid(2 * lo, 2 * (n + 1));
    if (power % 2 == 1) {
        mid.set_block(0, n + 1, P);
        mid.set_block(lo, 0, P);
    } else {
        mid.set_block(0, 0, P);
        mid.set_block(lo, n + 1, P);
    }
    return sign_block(lo) * mid * sign_block(n + 1);
}

}  // namespace bim
