// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bim/dunkl.hpp"
#include "bim/linalg.hpp"

namespace bim {

// diag((-1)^{n-i}), i = 1..n
Matrix build_An(long n);

// n x (n+1): (i,i) = (-1)^{n-i+1/2} m2^{(n+1-i)}, (i,i+1) = (-1)^{n-i} m1^{(i)}.
Matrix build_Nn(long n, const Multiplicity& k);

// n-1 when max{t1,t2} <= n < t1+t2, else n.
long rank_Nn_expected(long n, const Multiplicity& k);

// D(x3) restricted to C^2 (x) R[x1,x2]: sigma1 T1 + sigma2 T2.
SpinorPoly apply_dirac_x3(const SpinorPoly& f, const Multiplicity& k);

// Matrix of D(x3)^power from alpha_n to alpha_{n-power}, evaluated on polynomials.
Matrix dirac_x3_power_direct(long n, const Multiplicity& k, long power);

// The same matrix assembled from the I/A/N block factorization.
Matrix dirac_x3_power_matrix(long n, const Multiplicity& k, long power);

}  // namespace bim
