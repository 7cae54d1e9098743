// SPDX-License-Identifier: Apache-2.0
#include "bim/monogenics.hpp"

namespace bim {

std::vector<SpinorPoly> MonogenicSpace::elements() const {
    std::vector<SpinorPoly> out;
    for (const auto& v : space.basis()) out.push_back(ambient.reconstruct(v));
    return out;
}

MonogenicSpace compute_kernel_on_support(int n, const Multiplicity& k,
                                         const std::function<bool(const BasisElement&)>& allowed) {
    MonogenicSpace s{n, k, GradedBasis(n, kAllVars), {}};
    const GradedBasis& amb = s.ambient;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < amb.size(); ++j)
        if (allowed(amb[j])) cols.push_back(j);

    std::vector<Vec> kernel;
    if (n == 0) {
        for (std::size_t j : cols) {
            Vec v(amb.size());
            v[j] = 1;
            kernel.push_back(std::move(v));
        }
    } else {
        GradedBasis cod(n - 1, kAllVars);
        Matrix D(cod.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            Vec img = cod.coordinates(apply_dirac(amb.element(cols[c]), k));
            for (std::size_t r = 0; r < img.size(); ++r) D(r, c) = img[r];
        }
        for (const auto& w : nullspace(D)) {
            Vec v(amb.size());
            for (std::size_t c = 0; c < cols.size(); ++c) v[cols[c]] = w[c];
            kernel.push_back(std::move(v));
        }
    }
    s.space = Subspace::span(amb.size(), kernel);
    return s;
}

MonogenicSpace compute_Mn(int n, const Multiplicity& k) {
    return compute_kernel_on_support(n, k, [](const BasisElement&) { return true; });
}

std::string to_string(CaseType t) {
    switch (t) {
        case CaseType::I: return "I";
        case CaseType::II: return "II";
        case CaseType::III: return "III";
        case CaseType::IV: return "IV";
        case CaseType::Gap: return "gap";
        case CaseType::Unlisted: return "unlisted";
    }
    return "?";
}

CaseInfo case_of(long n, const Multiplicity& k) {
    const Threshold t[3] = {k.t(1), k.t(2), k.t(3)};
    int reached = 0;
    for (const auto& x : t) reached += le(x, n);
    const bool dim_applies = lt(n, max(max(t[0], t[1]), t[2])) || le(t[0] + t[1] + t[2], n + 1);

    if (reached == 0) return {CaseType::I, 0};
    if (reached == 1) {
        for (int a = 0; a < 3; ++a)
            if (le(t[a], n)) return {CaseType::II, a + 1};
    }
    if (reached == 2) {
        for (int c = 0; c < 3; ++c) {
            if (le(t[c], n)) continue;
            const Threshold pair = t[(c + 1) % 3] + t[(c + 2) % 3];
            if (le(pair, n)) return {CaseType::III, c + 1};
        }
    }
    if (reached == 3 && le(t[0] + t[1] + t[2], n)) return {CaseType::IV, 0};
    return {dim_applies ? CaseType::Unlisted : CaseType::Gap, 0};
}

DimStatus dim_formula_status(long n, const Multiplicity& k) {
    const Threshold t1 = k.t(1), t2 = k.t(2), t3 = k.t(3);
    DimStatus s;
    s.applies = lt(n, max(max(t1, t2), t3)) || le(t1 + t2 + t3, n + 1);
    s.predicted = s.applies ? 2 * (n + 1) : 0;
    s.info = case_of(n, k);
    return s;
}

}  // namespace bim
