// SPDX-License-Identifier: Apache-2.0
#include "bim/bi_action.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace bim {

SpinorPoly apply_XYZ(int which, const SpinorPoly& f, const Multiplicity& k) {
    if (which < 1 || which > 3) throw std::invalid_argument("generator index must be 1..3");
    // X uses (b, c) = (2, 3); Y and Z follow cyclically.
    const int a = which, b = which % 3 + 1, c = b % 3 + 1;
    const VarSet sb = 1u << (b - 1), sc = 1u << (c - 1);
    const SpinorPoly g = reflect(sb | sc, f);

    SpinorPoly ang = Poly::var(c) * apply_T(b, g, k) - Poly::var(b) * apply_T(c, g, k);
    SpinorPoly r = (GaussRational::i() * Mat2::sigma(a)) * ang;
    r += GaussRational(Rational(1, 2)) * g;
    r += GaussRational(k[b]) * reflect(sc, f);
    r += GaussRational(k[c]) * reflect(sb, f);
    return r;
}

Matrix central_element(const ModuleMatrices& m, Central c) {
    switch (c) {
        case Central::Kappa: return anticommutator(m.X(), m.Y()) - m.Z();
        case Central::Lambda: return anticommutator(m.Y(), m.Z()) - m.X();
        case Central::Mu: return anticommutator(m.Z(), m.X()) - m.Y();
    }
    throw std::logic_error("bad central element");
}

std::array<Rational, 3> predicted_central_scalars(long n, const Multiplicity& k) {
    const Rational s = Rational(sign_pow(n)) * (k.sum() + n + 1);
    return {2 * (k[1] * k[2] + s * k[3]), 2 * (k[2] * k[3] + s * k[1]), 2 * (k[3] * k[1] + s * k[2])};
}

std::optional<Matrix> solve_in_span(const Matrix& B, const Matrix& W) {
    const std::size_t m = B.cols(), q = W.cols();
    Matrix aug(B.rows(), m + q);
    aug.set_block(0, 0, B);
    aug.set_block(0, m, W);
    Echelon e = row_reduce(aug);
    if (e.pivots.size() < m) throw std::invalid_argument("frame vectors are linearly dependent");
    for (std::size_t r = 0; r < m; ++r)
        if (e.pivots[r] != r) throw std::invalid_argument("frame vectors are linearly dependent");
    if (e.pivots.size() > m) return std::nullopt;
    return e.rref.block(0, m, m, q);
}

namespace {

Vec apply_on_coords(int which, const GradedBasis& amb, const Vec& v, const Multiplicity& k) {
    return amb.coordinates(apply_XYZ(which, amb.reconstruct(v), k));
}

}  // namespace

ModuleMatrices induced_matrices(int n, const Multiplicity& k, const std::vector<Vec>& frame,
                                const std::vector<Vec>& bottom, std::string provenance) {
    GradedBasis amb(n, kAllVars);
    const std::size_t m = frame.size(), r = bottom.size();
    std::vector<Vec> cols = frame;
    cols.insert(cols.end(), bottom.begin(), bottom.end());
    const Matrix B = Matrix::from_columns(amb.size(), cols);

    ModuleMatrices out;
    out.provenance = std::move(provenance);
    for (int w = 1; w <= 3; ++w) {
        std::vector<Vec> imgs;
        for (const auto& v : cols) imgs.push_back(apply_on_coords(w, amb, v, k));
        auto sol = solve_in_span(B, Matrix::from_columns(amb.size(), imgs));
        if (!sol) throw ClosureFailure("span is not invariant under generator " + std::to_string(w));
        // The bottom must map into itself.
        for (std::size_t j = m; j < m + r; ++j)
            for (std::size_t i = 0; i < m; ++i)
                if (!(*sol)(i, j).is_zero())
                    throw ClosureFailure("quotient subspace is not invariant under generator " + std::to_string(w));
        out.g[w - 1] = sol->block(0, 0, m, m);
    }
    return out;
}

std::vector<Vec> complement_frame(const Subspace& top, const Subspace& bottom) {
    const auto& tb = top.basis();
    std::vector<Vec> coords;
    for (const auto& v : bottom.basis()) {
        auto c = top.coordinates(v);
        if (!c) throw std::invalid_argument("bottom is not contained in top");
        coords.push_back(*c);
    }
    std::vector<bool> pivot(tb.size(), false);
    if (!coords.empty())
        for (auto p : row_reduce(Matrix::from_rows(tb.size(), coords)).pivots) pivot[p] = true;
    std::vector<Vec> frame;
    for (std::size_t j = 0; j < tb.size(); ++j)
        if (!pivot[j]) frame.push_back(tb[j]);
    return frame;
}

ModuleMatrices matrices_on(int n, const Multiplicity& k, const Subspace& top, const Subspace& bottom,
                           std::string provenance) {
    return induced_matrices(n, k, complement_frame(top, bottom), bottom.basis(), std::move(provenance));
}

RelationCertificate verify_bi_relations(const ModuleMatrices& m, const std::array<Rational, 3>& predicted) {
    RelationCertificate cert;
    cert.commute_ok = true;
    const Central cs[3] = {Central::Kappa, Central::Lambda, Central::Mu};
    for (int c = 0; c < 3; ++c) {
        Matrix C = central_element(m, cs[c]);
        for (const auto& G : m.g)
            if (!commutator(C, G).is_zero()) cert.commute_ok = false;
        GaussRational s;
        cert.scalars[c].predicted = predicted[c];
        if (C.is_scalar(&s)) {
            cert.scalars[c].computed = s;
            cert.scalars[c].matches = m.dim() == 0 || s == GaussRational(predicted[c]);
        }
    }
    return cert;
}

TwistElement::TwistElement(std::array<int, 2> eps, std::array<int, 3> perm) : eps_(eps), perm_(perm) {
    for (int e : eps_)
        if (e != 1 && e != -1) throw std::invalid_argument("sign pair entries must be +-1");
    auto sorted = perm_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{1, 2, 3}) throw std::invalid_argument("not a permutation of 1,2,3");
}

std::array<int, 3> eps_signs(const std::array<int, 2>& eps) { return {eps[0], eps[1], eps[0] * eps[1]}; }

int TwistElement::sign(int i) const { return eps_signs(eps_)[image(i) - 1]; }

TwistElement operator*(const TwistElement& g, const TwistElement& h) {
    // (g h)(X_i) = h_sign(i) * g(X_{h(i)}) = h_sign(i) g_sign(h(i)) X_{g(h(i))}
    std::array<int, 3> perm{}, src_sign{};
    for (int i = 1; i <= 3; ++i) {
        perm[i - 1] = g.image(h.image(i));
        src_sign[i - 1] = h.sign(i) * g.sign(h.image(i));
    }
    // Recover eps from signs indexed by target generator.
    std::array<int, 3> tgt{};
    for (int i = 1; i <= 3; ++i) tgt[perm[i - 1] - 1] = src_sign[i - 1];
    return TwistElement({tgt[0], tgt[1]}, perm);
}

TwistElement TwistElement::inverse() const {
    for (const auto& c : all())
        if (*this * c == identity()) return c;
    throw std::logic_error("no inverse in the twist group");
}

TwistElement TwistElement::alternate_cycle_convention() const {
    std::array<int, 3> inv{};
    for (int i = 1; i <= 3; ++i) inv[perm_[i - 1] - 1] = i;
    return TwistElement(eps_, inv);
}

std::vector<TwistElement> TwistElement::all() {
    std::vector<TwistElement> out;
    std::array<int, 3> p{1, 2, 3};
    std::vector<std::array<int, 3>> perms;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    for (int e1 : {1, -1})
        for (int e2 : {1, -1})
            for (const auto& q : perms) out.emplace_back(std::array<int, 2>{e1, e2}, q);
    return out;
}

std::string TwistElement::str() const {
    std::string cyc;
    const auto& p = perm_;
    if (p == std::array<int, 3>{1, 2, 3})
        cyc = "()";
    else if (p[0] == 1)
        cyc = "(2 3)";
    else if (p[1] == 2)
        cyc = "(1 3)";
    else if (p[2] == 3)
        cyc = "(1 2)";
    else if (p[0] == 2)
        cyc = "(1 2 3)";
    else
        cyc = "(1 3 2)";
    return "(" + std::to_string(eps_[0]) + "," + std::to_string(eps_[1]) + ");" + cyc;
}

TwistElement TwistElement::parse(const std::string& text) {
    // Accepted: "id", "(1 2 3)", "(-1,1)", "(-1,1);(1 2)", "((-1,-1),(1 2 3))".
    static const std::regex sign_re(R"(\(\s*([+-]?1)\s*,\s*([+-]?1)\s*\))");
    static const std::regex cyc_re(R"(\(\s*([123](?:\s+[123])*)\s*\))");
    std::string s = std::regex_replace(text, std::regex(R"(\bid\b)"), "");
    std::array<int, 2> eps{1, 1};
    std::smatch m;
    if (std::regex_search(s, m, sign_re)) {
        eps = {std::stoi(m[1].str()), std::stoi(m[2].str())};
        s = m.prefix().str() + " " + m.suffix().str();
    }
    std::array<int, 3> perm{1, 2, 3};
    if (std::regex_search(s, m, cyc_re)) {
        std::vector<int> cyc;
        for (char ch : m[1].str())
            if (ch >= '1' && ch <= '3') cyc.push_back(ch - '0');
        std::array<int, 4> seen{};
        for (int v : cyc)
            if (seen[v]++) throw std::invalid_argument("repeated index in cycle: '" + text + "'");
        for (std::size_t j = 0; j < cyc.size(); ++j) perm[cyc[j] - 1] = cyc[(j + 1) % cyc.size()];
        s = m.prefix().str() + " " + m.suffix().str();
    }
    if (s.find_first_not_of("(),; \t") != std::string::npos)
        throw std::invalid_argument("malformed twist: '" + text + "'");
    return TwistElement(eps, perm);
}

ModuleMatrices twist(const ModuleMatrices& m, const TwistElement& g) {
    ModuleMatrices out;
    out.provenance = m.provenance + "^" + g.str();
    for (int i = 1; i <= 3; ++i) out.g[i - 1] = GaussRational(g.sign(i)) * m.g[g.image(i) - 1];
    return out;
}

std::array<GaussRational, 3> twist_traces(const std::array<GaussRational, 3>& tr, const TwistElement& g) {
    std::array<GaussRational, 3> out;
    for (int i = 1; i <= 3; ++i) out[i - 1] = GaussRational(g.sign(i)) * tr[g.image(i) - 1];
    return out;
}

std::array<GaussRational, 3> twist_central(const std::array<GaussRational, 3>& c, const TwistElement& g) {
    // kappa, lambda, mu pair with Z, X, Y: C_j sits at index j % 3.
    std::array<GaussRational, 3> out;
    for (int j = 1; j <= 3; ++j) out[j % 3] = GaussRational(g.sign(j)) * c[g.image(j) % 3];
    return out;
}

}  // namespace bim
