// SPDX-License-Identifier: Apache-2.0
#include "bim/submodules.hpp"

#include <set>
#include <stdexcept>

namespace bim {

namespace {

SpinorPoly dirac_partial_pow(int axis, const SpinorPoly& f, const Multiplicity& k, int power) {
    SpinorPoly g = f;
    for (int p = 0; p < power && !g.is_zero(); ++p) g = apply_dirac(g, k, axis);
    return g;
}

bool supported_off_axis(const SpinorPoly& f, int axis) {
    for (const Poly* p : {&f.up, &f.down})
        for (const auto& [m, _] : p->terms())
            if (m[axis - 1] != 0) return false;
    return true;
}

}  // namespace

MonogenicSpace compute_submodule(int n, const Multiplicity& k, const std::vector<SubmoduleFilter>& filters) {
    std::set<int> seen;
    for (const auto& f : filters)
        if (!seen.insert(f.axis).second) throw std::invalid_argument("conflicting filters on one axis");
    return compute_kernel_on_support(n, k, [&](const BasisElement& e) {
        for (const auto& f : filters) {
            const Threshold t = k.t(f.axis);
            const int ex = e.mono[f.axis - 1];
            const bool is_high = le(t, ex);
            if ((f.mode == SubmoduleFilter::Mode::High) != is_high) return false;
        }
        return true;
    });
}

long partial_power_nullity(int axis, int n, const Multiplicity& k, int power) {
    GradedBasis dom(n, vars_without(axis));
    if (power > n) return static_cast<long>(dom.size());
    GradedBasis cod(n - power, vars_without(axis));
    Matrix m = matrix_of_operator([&](const SpinorPoly& f) { return dirac_partial_pow(axis, f, k, power); },
                                  dom, cod);
    return static_cast<long>(dom.size() - rank(m));
}

long predicted_dim_high(int n, const Multiplicity& k, const std::vector<int>& axes) {
    Threshold s = Threshold::finite(0);
    for (int a : axes) s = s + k.t(a);
    if (!le(s, n)) return 0;
    return 2 * (n - s.value() + 1);
}

long predicted_dim_low(int n, const Multiplicity& k, int axis) {
    const Threshold t = k.t(axis);
    if (lt(n, t)) return 2L * (n + 1);
    return partial_power_nullity(axis, n, k, static_cast<int>(t.value()));
}

DecompositionCertificate verify_decomposition(int n, const Multiplicity& k, int axis) {
    DecompositionCertificate c;
    c.axis = axis;
    MonogenicSpace M = compute_Mn(n, k);
    MonogenicSpace H = compute_submodule(n, k, {high(axis)});
    MonogenicSpace L = compute_submodule(n, k, {low(axis)});
    c.dim_M = static_cast<long>(M.dim());
    c.dim_high = static_cast<long>(H.dim());
    c.dim_low = static_cast<long>(L.dim());
    Subspace both = H.space.sum(L.space);
    c.dim_sum = static_cast<long>(both.dim());
    c.ok = c.dim_sum == c.dim_high + c.dim_low && both == M.space;
    return c;
}

SpinorPoly lift_from_slice(int axis, int n, const Multiplicity& k, const SpinorPoly& seed, int lower, int upper) {
    if (lower > upper || upper > n) throw std::invalid_argument("lift range must satisfy lower <= upper <= n");
    if (!supported_off_axis(seed, axis)) throw std::invalid_argument("seed depends on the lifting axis");
    for (const Poly* p : {&seed.up, &seed.down})
        for (const auto& [m, _] : p->terms())
            if (degree(m) != n - lower) throw std::invalid_argument("seed has the wrong degree");
    if (!dirac_partial_pow(axis, seed, k, upper - lower + 1).is_zero())
        throw std::invalid_argument("seed violates the D(x_axis)-power kill condition");

    const Mat2 s = Mat2::sigma(axis);
    SpinorPoly out, g = seed;
    for (int i = lower; i <= upper; ++i) {
        if (i > lower) g = apply_dirac(g, k, axis);
        const long ceil_half = (i + 1) / 2;
        const GaussRational coef = GaussRational(sign_pow(ceil_half)) * GaussRational(bracket_scalar(axis, i, upper, k));
        if (coef.is_zero() || g.is_zero()) continue;
        Monomial shift{0, 0, 0};
        shift[axis - 1] = i;
        SpinorPoly term = s.pow(static_cast<unsigned>(i)) * g;
        out += coef * SpinorPoly{term.up.shifted(shift), term.down.shifted(shift)};
    }
    return out;
}

namespace {

std::vector<SpinorPoly> slab_monomials(int deg, VarSet vars, const Monomial& prefactor) {
    std::vector<SpinorPoly> out;
    if (deg < 0) return out;
    GradedBasis b(deg, vars);
    for (std::size_t j = 0; j < b.size(); ++j) {
        SpinorPoly e = b.element(j);
        out.push_back({e.up.shifted(prefactor), e.down.shifted(prefactor)});
    }
    return out;
}

}  // namespace

std::optional<LiftPlan> lift_plan_high(int n, const Multiplicity& k, const std::vector<int>& axes) {
    if (axes.empty()) throw std::invalid_argument("no axes");
    if (predicted_dim_high(n, k, axes) == 0) return std::nullopt;
    LiftPlan plan;
    plan.axis = axes[0];
    plan.lower = static_cast<int>(k.t(axes[0]).value());
    Monomial pre{0, 0, 0};
    int rest = 0;
    for (std::size_t j = 1; j < axes.size(); ++j) {
        const int t = static_cast<int>(k.t(axes[j]).value());
        pre[axes[j] - 1] = t;
        rest += t;
    }
    plan.upper = n - rest;
    plan.seeds = slab_monomials(n - plan.lower - rest, vars_without(plan.axis), pre);
    return plan;
}

LiftPlan lift_plan_low(int n, const Multiplicity& k, int axis) {
    LiftPlan plan;
    plan.axis = axis;
    plan.lower = 0;
    const Threshold t = k.t(axis);
    if (lt(n, t)) {
        plan.upper = n;
        plan.seeds = slab_monomials(n, vars_without(axis), {0, 0, 0});
        return plan;
    }
    const int tv = static_cast<int>(t.value());
    plan.upper = tv - 1;
    GradedBasis dom(n, vars_without(axis));
    GradedBasis cod(n - tv, vars_without(axis));
    Matrix m = matrix_of_operator([&](const SpinorPoly& f) { return dirac_partial_pow(axis, f, k, tv); }, dom, cod);
    for (const auto& v : nullspace(m)) plan.seeds.push_back(dom.reconstruct(v));
    return plan;
}

}  // namespace bim
