// SPDX-License-Identifier: Apache-2.0
#include "bim/monogenics.hpp"
#include "bim/submodules.hpp"
#include "doctest.h"

using namespace bim;

TEST_CASE("small monogenic spaces") {
    CHECK(compute_Mn(0, Multiplicity{7, 1, 2}).dim() == 2);
    CHECK(compute_Mn(3, Multiplicity{1, 1, 1}).dim() == 8);
    CHECK(compute_Mn(2, Multiplicity{1, 1, 1}).dim() == 6);
}

TEST_CASE("kernel elements are monogenic") {
    Multiplicity k{Rational(-1, 2), 2, Rational(1, 3)};
    for (int n = 0; n <= 5; ++n) {
        MonogenicSpace M = compute_Mn(n, k);
        for (const auto& f : M.elements()) CHECK(apply_dirac(f, k).is_zero());
    }
}

TEST_CASE("gap dimension agrees with the partial-operator count on every axis") {
    Multiplicity k{Rational(-1, 2), Rational(-3, 2), Rational(-1, 2)};
    DimStatus st = dim_formula_status(3, k);
    CHECK(!st.applies);
    CHECK(st.info.type == CaseType::Gap);
    long dim = static_cast<long>(compute_Mn(3, k).dim());
    // Frozen after cross-checking against the per-axis identity below.
    CHECK(dim == 10);
    for (int a = 1; a <= 3; ++a) {
        const long t = k.t(a).value();
        CHECK(dim == 2 * (3 - t + 1) + partial_power_nullity(a, 3, k, static_cast<int>(t)));
    }
}

TEST_CASE("dimension formula status and case labels") {
    Multiplicity k131{Rational(-1, 2), Rational(-3, 2), Rational(-1, 2)};
    DimStatus s = dim_formula_status(5, k131);
    CHECK(s.applies);
    CHECK(s.predicted == 12);
    CHECK(s.info.type == CaseType::IV);
    Multiplicity k3{Rational(-3, 2), 0, 0};
    s = dim_formula_status(2, k3);
    CHECK(s.applies);
    CHECK(s.predicted == 6);
    CHECK(s.info.type == CaseType::I);
    CHECK(case_of(3, k3).type == CaseType::II);
    CHECK(case_of(3, k3).axis == 1);
    Multiplicity k212{Rational(-1, 2), 2, Rational(-1, 2)};
    CHECK(case_of(2, k212).type == CaseType::III);
    CHECK(case_of(2, k212).axis == 2);
    CHECK(case_of(1, k212).type == CaseType::Unlisted);
    CHECK(case_of(4, k131).type == CaseType::Unlisted);
}
