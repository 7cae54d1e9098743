// SPDX-License-Identifier: Apache-2.0
#include "bim/submodules.hpp"
#include "doctest.h"

using namespace bim;

TEST_CASE("named submodule dimensions") {
    Multiplicity k{Rational(-3, 2), 1, 1};
    CHECK(compute_submodule(2, k, {high(1)}).dim() == 0);
    CHECK(compute_submodule(5, k, {high(1)}).dim() == 6);
    Multiplicity k11{Rational(-1, 2), Rational(-1, 2), 4};
    CHECK(compute_submodule(2, k11, {high(1), high(2)}).dim() == 2);
    CHECK(predicted_dim_high(2, k11, {1, 2}) == 2);
    Multiplicity k131{Rational(-1, 2), Rational(-3, 2), Rational(-1, 2)};
    CHECK(compute_submodule(5, k131, {high(1), high(2), high(3)}).dim() == 2);
    CHECK_THROWS(compute_submodule(3, k, {high(1), low(1)}));
}

TEST_CASE("direct sum decomposition") {
    Multiplicity k{Rational(-3, 2), 1, 1};
    auto c = verify_decomposition(4, k, 1);
    CHECK(c.ok);
    CHECK(c.dim_high == 4);
    CHECK(c.dim_high + c.dim_low == c.dim_M);
    auto small = verify_decomposition(2, k, 1);
    CHECK(small.ok);
    CHECK(small.dim_high == 0);
    CHECK(small.dim_low == small.dim_M);
}

TEST_CASE("smallest lift is a monomial multiple of x1^t1") {
    Multiplicity k{Rational(-3, 2), 1, 2};
    SpinorPoly f = lift_from_slice(1, 3, k, {Poly(1), Poly()}, 3, 3);
    CHECK(apply_dirac(f, k).is_zero());
    CHECK(f.up.is_zero());
    CHECK(f.down.terms().size() == 1);
    CHECK(f.down.terms().begin()->first == Monomial{3, 0, 0});
}

TEST_CASE("lifts land in the target submodules and are injective") {
    const char* ks[] = {"-1/2,-3/2,-1/2", "-3/2,1,-1/2", "1,-1/2,-5/2", "1/2,1,2"};
    for (const char* ktxt : ks) {
        Multiplicity k = parse_multiplicity(ktxt);
        for (int n = 0; n <= 6; ++n) {
            std::vector<std::vector<int>> axis_sets = {{1}, {2}, {3}, {1, 2}, {2, 3}, {3, 1}, {1, 2, 3}};
            for (const auto& axes : axis_sets) {
                std::vector<SubmoduleFilter> fs;
                for (int a : axes) fs.push_back(high(a));
                MonogenicSpace target = compute_submodule(n, k, fs);
                CHECK(static_cast<long>(target.dim()) == predicted_dim_high(n, k, axes));
                auto plan = lift_plan_high(n, k, axes);
                if (!plan) {
                    CHECK(target.dim() == 0);
                    continue;
                }
                std::vector<Vec> lifted;
                for (const auto& s : plan->seeds) {
                    SpinorPoly f = lift_from_slice(plan->axis, n, k, s, plan->lower, plan->upper);
                    CHECK(apply_dirac(f, k).is_zero());
                    Vec v = target.ambient.coordinates(f);
                    CHECK(target.space.contains(v));
                    lifted.push_back(v);
                }
                CHECK(Subspace::span(target.ambient.size(), lifted).dim() == target.dim());
            }
            for (int a = 1; a <= 3; ++a) {
                MonogenicSpace target = compute_submodule(n, k, {low(a)});
                CHECK(static_cast<long>(target.dim()) == predicted_dim_low(n, k, a));
                LiftPlan plan = lift_plan_low(n, k, a);
                std::vector<Vec> lifted;
                for (const auto& s : plan.seeds) {
                    SpinorPoly f = lift_from_slice(a, n, k, s, plan.lower, plan.upper);
                    Vec v = target.ambient.coordinates(f);
                    CHECK(target.space.contains(v));
                    lifted.push_back(v);
                }
                CHECK(Subspace::span(target.ambient.size(), lifted).dim() == target.dim());
            }
        }
    }
}

TEST_CASE("kill condition is enforced") {
    Multiplicity k{Rational(-1, 2), 1, 1};
    // D(x1) does not kill up (x) x2 when k2 != -1/2.
    CHECK_THROWS(lift_from_slice(1, 1, k, {Poly::var(2), Poly()}, 0, 0));
}
