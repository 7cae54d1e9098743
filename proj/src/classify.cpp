// SPDX-License-Identifier: Apache-2.0
#include "bim/classify.hpp"

#include "bim/submodules.hpp"

#include <algorithm>
#include <stdexcept>

namespace bim {

NamedSubmodule NamedSubmodule::of(std::vector<int> axes) {
    std::sort(axes.begin(), axes.end());
    return {false, std::move(axes)};
}

std::string NamedSubmodule::str() const {
    if (zero) return "0";
    std::string s = "M";
    for (int a : axes) s += std::to_string(a);
    return s;
}

std::string subquotient_name(const NamedSubmodule& top, const NamedSubmodule& bottom) {
    return bottom.zero ? top.str() : top.str() + "/" + bottom.str();
}

bool ClassificationCertificate::ok() const {
    for (const auto& f : factors)
        if (!f.ok()) return false;
    for (const auto& c : composites)
        if (!c.ok()) return false;
    for (const auto& f : filtrations)
        if (!f.ok()) return false;
    return true;
}

namespace {

// Parameters shared by every theorem of one (n, k).
struct Ctx {
    long n;
    Rational k1, k2, k3, K, N, n1;
    long t[4] = {0, 0, 0, 0};  // t[a]; 0 when infinite
    const char* par;
};

IrrepSpec O(long d, Rational a, Rational b, Rational c, const char* g = "id") {
    return make_spec(Family::O, d, std::move(a), std::move(b), std::move(c), TwistElement::parse(g));
}
IrrepSpec E(long d, Rational a, Rational b, Rational c, const char* g = "id") {
    return make_spec(Family::E, d, std::move(a), std::move(b), std::move(c), TwistElement::parse(g));
}

std::string ladder_id(const std::string& base, const Ctx& c) { return base + "." + c.par; }

PredictedFactor factor(NamedSubmodule top, NamedSubmodule bottom, IrrepSpec spec, IrrepSpec iso,
                       std::vector<FramePiece> frame) {
    return {std::move(top), std::move(bottom), 2, std::move(spec), std::move(iso), std::move(frame)};
}

void fill_type_I(ClassificationReport& r, const Ctx& c) {
    const bool odd = c.n % 2;
    r.subcase = std::string("I.") + c.par;
    r.hypothesis = "n < min{t1,t2,t3}";
    r.nonneg_clause = "k1,k2,k3 >= 0";
    r.nonneg_holds = c.k1 >= 0 && c.k2 >= 0 && c.k3 >= 0;
    const Rational a = c.k2 + c.k3 + c.N, b = c.k1 + c.k3 + c.N, cc = c.k1 + c.k2 + c.N;
    IrrepSpec spec = odd ? E(c.n, a, -b, cc) : O(c.n, a, -b, -cc, "(1,-1)");
    IrrepSpec iso = odd ? E(c.n, a, b, cc) : O(c.n, a, b, cc);
    r.factors.push_back(factor(NamedSubmodule::whole(), NamedSubmodule::zero_module(), spec, iso,
                               {{{ladder_id("I", c), 0}, 0, c.n}}));
    r.filtrations.push_back({NamedSubmodule::zero_module(), NamedSubmodule::whole()});
}

void fill_type_II(ClassificationReport& r, const Ctx& c, int a) {
    const bool odd = c.n % 2;
    const long ta = c.t[a];
    const Rational &k1 = c.k1, &k2 = c.k2, &k3 = c.k3, &K = c.K, &N = c.N, &n1 = c.n1;
    const long dh = c.n - ta, dq = ta - 1;
    IrrepSpec high, quot, high_iso, quot_iso;
    int b = 0, d = 0;  // the two axes of the nonnegativity clause
    if (a == 2) {
        b = 1, d = 3;
        r.hypothesis = "t2 <= n < min{t1,t3}";
        if (odd) {
            high = O(dh, k3 + N, -K - N, -k1 - N, "(-1,-1)");
            quot = O(dq, k3, -K - n1, k1);
            high_iso = O(dh, -k3 - N, K + N, -k1 - N);
            quot_iso = quot;
        } else {
            high = E(dh, k3 + N, -K - N, -k1 - N, "(-1,1)");
            quot = O(dq, k3, -K - n1, -k1, "(1,-1)");
            high_iso = E(dh, k3 + N, K + N, k1 + N, "(-1,1)");
            quot_iso = O(dq, k3, K + n1, k1);
        }
    } else if (a == 3) {
        b = 1, d = 2;
        r.hypothesis = "t3 <= n < min{t1,t2}";
        if (odd) {
            high = O(dh, k1 + N, -K - N, -k2 - N, "((-1,-1),(1 3 2))");
            quot = O(dq, k1, -K - n1, k2, "(1 3 2)");
            high_iso = O(dh, -k2 - N, -k1 - N, K + N);
            quot_iso = O(dq, k2, k1, -K - n1);
        } else {
            high = E(dh, k1 + N, -K - N, -k2 - N, "((-1,1),(1 3 2))");
            quot = O(dq, k1, -K - n1, -k2, "((1,-1),(1 3 2))");
            high_iso = E(dh, k2 + N, k1 + N, K + N, "(-1,-1)");
            quot_iso = O(dq, k2, k1, K + n1);
        }
    } else {
        b = 2, d = 3;
        r.hypothesis = "t1 <= n < min{t2,t3}";
        if (odd) {
            high = O(dh, k2 + N, -K - N, -k3 - N, "((-1,-1),(1 2 3))");
            quot = O(dq, k2, -K - n1, k3, "(1 2 3)");
            high_iso = O(dh, K + N, -k3 - N, -k2 - N);
            quot_iso = O(dq, -K - n1, k3, k2);
        } else {
            high = E(dh, k2 + N, -K - N, -k3 - N, "((-1,1),(1 2 3))");
            quot = O(dq, k2, -K - n1, -k3, "((1,-1),(1 2 3))");
            high_iso = E(dh, K + N, k3 + N, k2 + N, "(1,-1)");
            quot_iso = O(dq, K + n1, k3, k2);
        }
    }
    r.subcase = "II.x" + std::to_string(a) + "." + c.par;
    r.nonneg_clause = "k" + std::to_string(b) + ",k" + std::to_string(d) + " >= 0";
    const Rational* ks[4] = {nullptr, &k1, &k2, &k3};
    r.nonneg_holds = *ks[b] >= 0 && *ks[d] >= 0;

    // The type I family moved so that its middle bracket sits on x_a.
    const int rot = a == 2 ? 0 : a == 3 ? 1 : 2;
    const LadderSpec L{ladder_id("I", c), rot};
    const auto Ma = NamedSubmodule::of({a});
    r.factors.push_back(factor(Ma, NamedSubmodule::zero_module(), high, high_iso, {{L, ta, c.n}}));
    r.factors.push_back(factor(NamedSubmodule::whole(), Ma, quot, quot_iso, {{L, 0, ta - 1}}));
    r.filtrations.push_back({NamedSubmodule::zero_module(), Ma, NamedSubmodule::whole()});
}

void fill_type_III(ClassificationReport& r, const Ctx& c, int big) {
    const bool odd = c.n % 2;
    const Rational &k1 = c.k1, &k2 = c.k2, &k3 = c.k3, &K = c.K, &N = c.N, &n1 = c.n1;
    const int rot = big == 2 ? 0 : big == 3 ? 1 : 2;
    const int a1 = rotate_axis(1, rot), a3 = rotate_axis(3, rot);
    const long d0 = c.n - c.t[a1] - c.t[a3], dA = c.t[a3] - 1, dB = c.t[a1] - 1;
    // inter: M(a1) cap M(a3); A: M(a1)/inter and M/M(a3); B: M(a3)/inter and M/M(a1).
    IrrepSpec inter, A, B, inter_iso, A_iso, B_iso;
    if (big == 2) {
        r.hypothesis = "t1+t3 <= n < t2";
        if (odd) {
            inter = E(d0, k1 + k2 + N, -k2 - k3 - N, N, "((-1,-1),(2 3))");
            A = O(dA, k2, -K - n1, k1, "(2 3)");
            B = O(dB, k2, -K - n1, k3, "(1 2 3)");
            inter_iso = E(d0, k1 + k2 + N, N, k2 + k3 + N, "(-1,1)");
            A_iso = O(dA, k2, k1, -K - n1);
            B_iso = O(dB, -K - n1, k3, k2);
        } else {
            inter = O(d0, k1 + k2 + N, -k2 - k3 - N, -N, "((-1,1),(2 3))");
            A = O(dA, k2, -K - n1, -k1, "((1,-1),(2 3))");
            B = O(dB, k2, -K - n1, -k3, "((1,-1),(1 2 3))");
            inter_iso = O(d0, -k1 - k2 - N, N, -k2 - k3 - N);
            A_iso = O(dA, k2, k1, K + n1);
            B_iso = O(dB, K + n1, k3, k2);
        }
    } else if (big == 3) {
        r.hypothesis = "t1+t2 <= n < t3";
        if (odd) {
            inter = E(d0, k2 + k3 + N, -k1 - k3 - N, N, "((-1,-1),(1 2))");
            A = O(dA, k3, -K - n1, k2, "(1 2)");
            B = O(dB, k3, -K - n1, k1);
            inter_iso = E(d0, k1 + k3 + N, k2 + k3 + N, N, "(-1,-1)");
            A_iso = O(dA, -K - n1, k3, k2);
            B_iso = B;
        } else {
            inter = O(d0, k2 + k3 + N, -k1 - k3 - N, -N, "((-1,1),(1 2))");
            A = O(dA, k3, -K - n1, -k2, "((1,-1),(1 2))");
            B = O(dB, k3, -K - n1, -k1, "(1,-1)");
            inter_iso = O(d0, -k1 - k3 - N, -k2 - k3 - N, N);
            A_iso = O(dA, K + n1, k3, k2);
            B_iso = O(dB, k3, K + n1, k1);
        }
    } else {
        r.hypothesis = "t2+t3 <= n < t1";
        if (odd) {
            inter = E(d0, k1 + k3 + N, -k1 - k2 - N, N, "((-1,-1),(1 3))");
            A = O(dA, k1, -K - n1, k3, "(1 3)");
            B = O(dB, k1, -K - n1, k2, "(1 3 2)");
            inter_iso = E(d0, N, k1 + k2 + N, k1 + k3 + N, "(1,-1)");
            A_iso = O(dA, k3, -K - n1, k1);
            B_iso = O(dB, k2, k1, -K - n1);
        } else {
            inter = O(d0, k1 + k3 + N, -k1 - k2 - N, -N, "((-1,1),(1 3))");
            A = O(dA, k1, -K - n1, -k3, "((1,-1),(1 3))");
            B = O(dB, k1, -K - n1, -k2, "((1,-1),(1 3 2))");
            inter_iso = O(d0, N, -k1 - k2 - N, -k1 - k3 - N);
            A_iso = O(dA, k3, K + n1, k1);
            B_iso = O(dB, k2, k1, K + n1);
        }
    }
    const int lo = std::min(a1, a3), hi = std::max(a1, a3);
    r.subcase = "III.x" + std::to_string(lo) + "x" + std::to_string(hi) + "." + c.par;
    r.nonneg_clause = "k" + std::to_string(big) + " >= 0";
    const Rational* ks[4] = {nullptr, &k1, &k2, &k3};
    r.nonneg_holds = *ks[big] >= 0;

    const LadderSpec P{ladder_id("III.x1", c), rot}, Q{ladder_id("III.x3", c), rot};
    const auto M = NamedSubmodule::whole(), Z = NamedSubmodule::zero_module();
    const auto M1 = NamedSubmodule::of({a1}), M3 = NamedSubmodule::of({a3}), M13 = NamedSubmodule::of({a1, a3});
    const FramePiece low_p{P, 0, c.t[a3] - 1}, low_q{Q, 0, c.t[a1] - 1};
    r.factors.push_back(factor(M13, Z, inter, inter_iso, {{P, c.t[a3], c.n - c.t[a1]}}));
    r.factors.push_back(factor(M1, M13, A, A_iso, {low_p}));
    r.factors.push_back(factor(M, M3, A, A_iso, {low_p}));
    r.factors.push_back(factor(M3, M13, B, B_iso, {low_q}));
    r.factors.push_back(factor(M, M1, B, B_iso, {low_q}));
    r.filtrations.push_back({Z, M13, M1, M});
    r.filtrations.push_back({Z, M13, M3, M});
}

void fill_type_IV(ClassificationReport& r, const Ctx& c) {
    const bool odd = c.n % 2;
    const Rational &k1 = c.k1, &k2 = c.k2, &k3 = c.k3, &K = c.K, &N = c.N, &n1 = c.n1;
    const long t1 = c.t[1], t2 = c.t[2], t3 = c.t[3];
    r.subcase = std::string("IV.") + c.par;
    r.hypothesis = "n >= t1+t2+t3";
    r.nonneg_clause = "none";
    r.nonneg_holds = true;
    const long d0 = c.n - t1 - t2 - t3;
    const Rational s = odd ? Rational(-K - n1) : Rational(K + n1);
    const IrrepSpec top = odd ? O(d0, k1 + N, k2 + N, k3 + N) : E(d0, k1 + N, k2 + N, k3 + N);
    const IrrepSpec q1 = O(t1 - 1, s, k3, k2), q2 = O(t2 - 1, k3, s, k1), q3 = O(t3 - 1, k2, k1, s);

    // p: middle x2, in M1 cap M3; q: middle x3, in M1 cap M2; r: middle x1, in M2 cap M3.
    const LadderSpec p{ladder_id("IV.x1x3", c), 0}, q{ladder_id("IV.x1x2", c), 0},
        rr{ladder_id("IV.x2x3", c), 0};
    const FramePiece p_low{p, 0, t2 - 1}, q_low{q, 0, t3 - 1}, r_low{rr, 0, t1 - 1};
    const auto M = NamedSubmodule::whole(), Z = NamedSubmodule::zero_module();
    const auto M1 = NamedSubmodule::of({1}), M2 = NamedSubmodule::of({2}), M3 = NamedSubmodule::of({3});
    const auto M123 = NamedSubmodule::of({1, 2, 3});
    r.factors.push_back(factor(M123, Z, top, top, {{p, t2, c.n - t1 - t3}}));
    r.factors.push_back(factor(M, M1, q1, q1, {r_low}));
    r.factors.push_back(factor(M, M2, q2, q2, {p_low}));
    r.factors.push_back(factor(M, M3, q3, q3, {q_low}));
    r.composites.push_back({M1, M123, {2, 3}, {p_low, q_low}});
    r.composites.push_back({M2, M123, {1, 3}, {r_low, q_low}});
    r.composites.push_back({M3, M123, {1, 2}, {r_low, p_low}});
    for (const auto& mid : {M1, M2, M3}) r.filtrations.push_back({Z, M123, mid, M});
}

MonogenicSpace space_of(long n, const Multiplicity& k, const NamedSubmodule& s) {
    if (s.zero) {
        MonogenicSpace z = compute_Mn(static_cast<int>(n), k);
        z.space = Subspace(z.ambient.size());
        return z;
    }
    if (s.axes.empty()) return compute_Mn(static_cast<int>(n), k);
    std::vector<SubmoduleFilter> f;
    for (int a : s.axes) f.push_back(high(a));
    return compute_submodule(static_cast<int>(n), k, f);
}

}  // namespace

ClassificationReport classify(long n, const Multiplicity& k) {
    if (n < 0) throw std::invalid_argument("classify needs n >= 0");
    ClassificationReport r;
    r.n = n;
    r.k = k;
    r.t = {k.t(1), k.t(2), k.t(3)};
    const DimStatus st = dim_formula_status(n, k);
    r.info = st.info;
    r.dim_formula_applies = st.applies;
    r.dim_predicted = st.predicted;
    r.dim_M = compute_Mn(static_cast<int>(n), k).dim();
    for (int a = 1; a <= 3; ++a)
        r.submodule_dims["M" + std::to_string(a)] = space_of(n, k, NamedSubmodule::of({a})).dim();

    Ctx c{n, k[1], k[2], k[3], k.sum(), frac(n + 1, 2), Rational(n + 1), {0, 0, 0, 0}, n % 2 ? "odd" : "even"};
    for (int a = 1; a <= 3; ++a)
        if (r.t[a - 1].is_finite()) c.t[a] = r.t[a - 1].value();

    switch (r.info.type) {
        case CaseType::I: fill_type_I(r, c); break;
        case CaseType::II: fill_type_II(r, c, r.info.axis); break;
        case CaseType::III: fill_type_III(r, c, r.info.axis); break;
        case CaseType::IV: fill_type_IV(r, c); break;
        default: break;
    }
    return r;
}

std::vector<GaussRational> word_trace_signature(const ModuleMatrices& m, int max_len) {
    std::vector<GaussRational> out;
    std::vector<Matrix> layer{Matrix::identity(m.dim())};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Matrix> next;
        for (const auto& w : layer)
            for (int g = 0; g < 3; ++g) {
                next.push_back(w * m.g[g]);
                out.push_back(next.back().trace());
            }
        layer = std::move(next);
    }
    return out;
}

namespace {

std::array<GaussRational, 3> traces_of(const ModuleMatrices& m) {
    return {m.X().trace(), m.Y().trace(), m.Z().trace()};
}

std::optional<std::array<GaussRational, 3>> central_of(const ModuleMatrices& m) {
    std::array<GaussRational, 3> out;
    const Central cs[3] = {Central::Kappa, Central::Lambda, Central::Mu};
    for (int i = 0; i < 3; ++i)
        if (!central_element(m, cs[i]).is_scalar(&out[i])) return std::nullopt;
    return out;
}

std::array<GaussRational, 3> to_gauss(const std::array<Rational, 3>& a) {
    return {GaussRational(a[0]), GaussRational(a[1]), GaussRational(a[2])};
}

// Shared state of one verification run.
class Verifier {
public:
    Verifier(const ClassificationReport& r) : r_(r), M_(compute_Mn(static_cast<int>(r.n), r.k)) {}

    const Subspace& space(const NamedSubmodule& s) {
        auto key = s.str();
        auto it = spaces_.find(key);
        if (it == spaces_.end()) it = spaces_.emplace(key, space_of(r_.n, r_.k, s).space).first;
        return it->second;
    }

    const Ladder& ladder(const LadderSpec& spec) {
        auto key = spec.str();
        auto it = ladders_.find(key);
        if (it == ladders_.end()) it = ladders_.emplace(key, build_ladder(spec, r_.n, r_.k)).first;
        return it->second;
    }

    std::array<std::vector<Vec>, 2> frames(const std::vector<FramePiece>& pieces) {
        std::array<std::vector<Vec>, 2> out;
        for (const auto& p : pieces) {
            const Ladder& L = ladder(p.ladder);
            for (int col = 0; col < 2; ++col)
                for (const auto& f : ladder_column(L, col, p.from, p.to))
                    out[col].push_back(M_.ambient.coordinates(f));
        }
        return out;
    }

    // Both copies as modules over the bottom, or nullopt with a failure note.
    std::optional<std::array<ModuleMatrices, 2>> copies(const NamedSubmodule& top, const NamedSubmodule& bottom,
                                                        const std::vector<FramePiece>& pieces,
                                                        std::vector<std::string>& failures, bool& frame_ok,
                                                        bool& identical) {
        std::array<std::vector<Vec>, 2> fr;
        try {
            fr = frames(pieces);
        } catch (const std::exception& e) {
            failures.push_back(std::string("ladder construction: ") + e.what());
            return std::nullopt;
        }
        const Subspace& T = space(top);
        const Subspace& B = space(bottom);
        std::vector<Vec> all = B.basis();
        bool inside = true;
        for (const auto& col : fr)
            for (const auto& v : col) {
                inside = inside && T.contains(v);
                all.push_back(v);
            }
        const Subspace S = Subspace::span(T.ambient(), all);
        frame_ok = inside && S == T && S.dim() == B.dim() + fr[0].size() + fr[1].size();
        if (!frame_ok) failures.push_back("ladder frame does not give a basis of the subquotient");

        std::array<ModuleMatrices, 2> out;
        try {
            for (int col = 0; col < 2; ++col)
                out[col] = induced_matrices(static_cast<int>(r_.n), r_.k, fr[col], B.basis(),
                                            subquotient_name(top, bottom) + "[col" + std::to_string(col) + "]");
        } catch (const std::exception& e) {
            frame_ok = false;
            failures.push_back(std::string("induced action: ") + e.what());
            return std::nullopt;
        }
        identical = out[0].g == out[1].g;
        if (!identical) failures.push_back("column copies differ");
        return out;
    }

    FactorCheck check(const PredictedFactor& f, std::size_t cap) {
        FactorCheck c;
        c.name = f.name();
        c.expected_dim = static_cast<std::size_t>(f.multiplicity) * f.spec.dim();
        c.computed_dim = space(f.top).dim() - space(f.bottom).dim();
        c.dimension = c.computed_dim == c.expected_dim;
        if (!c.dimension) c.failures.push_back("dimension");

        auto cp = copies(f.top, f.bottom, f.frame, c.failures, c.frame_ok, c.copies_identical);
        const TwistElement alt = f.spec.twist.alternate_cycle_convention();
        c.alternate_differs = !(alt == f.spec.twist);
        if (!cp) return c;
        const ModuleMatrices& V = (*cp)[0];

        const auto tr = traces_of(V);
        const auto cen = central_of(V);
        c.traces = tr == spec_traces(f.spec);
        c.central = cen && *cen == spec_central(f.spec) && *cen == to_gauss(predicted_central_scalars(r_.n, r_.k));
        const auto sig = word_trace_signature(V);
        c.word_traces = sig == word_trace_signature(build_irrep(f.spec));
        if (!c.traces) c.failures.push_back("traces");
        if (!c.central) c.failures.push_back("central scalars");
        if (!c.word_traces) c.failures.push_back("word traces");

        IrrepSpec alt_spec = f.spec;
        alt_spec.twist = alt;
        c.alternate_matches = tr == spec_traces(alt_spec) && cen && *cen == spec_central(alt_spec) &&
                              sig == word_trace_signature(build_irrep(alt_spec));

        c.hypothesis = r_.nonneg_holds;
        if (c.hypothesis) {
            c.criterion = is_irreducible_by_criterion(f.spec);
            if (!c.criterion) c.failures.push_back("irreducibility criterion");
            c.isomorph = tr == spec_traces(f.isomorph) && cen && *cen == spec_central(f.isomorph);
            if (!c.isomorph) c.failures.push_back("isomorph trace data");
            if (V.dim() <= cap) {
                c.burnside = is_irreducible_burnside(V, cap);
                if (!*c.burnside) c.failures.push_back("Burnside");
                try {
                    const IrrepSpec id = identify(V, cap);
                    c.identify_ok = spec_traces(id) == spec_traces(f.isomorph) &&
                                    spec_central(id) == spec_central(f.isomorph);
                } catch (const IdentifyFailure&) {
                    c.identify_ok = false;
                }
                if (!*c.identify_ok) c.failures.push_back("identify");
            }
        }
        return c;
    }

    CompositeCheck check(const CompositeClaim& cl) {
        CompositeCheck c;
        c.name = cl.name();
        std::size_t expected = 0;
        std::array<GaussRational, 3> tr_expected{};
        for (std::size_t i : cl.parts) {
            const auto& f = r_.factors.at(i);
            expected += static_cast<std::size_t>(f.multiplicity) * f.spec.dim();
            const auto t = spec_traces(f.spec);
            for (int j = 0; j < 3; ++j) tr_expected[j] += t[j];
        }
        c.dimension = space(cl.top).dim() - space(cl.bottom).dim() == expected;
        if (!c.dimension) c.failures.push_back("dimension");
        auto cp = copies(cl.top, cl.bottom, cl.frame, c.failures, c.frame_ok, c.copies_identical);
        if (!cp) return c;
        const ModuleMatrices& V = (*cp)[0];
        c.traces = traces_of(V) == tr_expected;
        const auto cen = central_of(V);
        c.central = cen && *cen == to_gauss(predicted_central_scalars(r_.n, r_.k));
        if (!c.traces) c.failures.push_back("traces");
        if (!c.central) c.failures.push_back("central scalars");
        return c;
    }

    FiltrationCheck check(const std::vector<NamedSubmodule>& chain) {
        FiltrationCheck c;
        c.dim_M = static_cast<long>(M_.dim());
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            const auto name = subquotient_name(chain[i + 1], chain[i]);
            c.chain += (i ? " < " : "") + chain[i + 1].str();
            c.computed_sum += static_cast<long>(space(chain[i + 1]).dim() - space(chain[i]).dim());
            long predicted = -1;
            for (const auto& f : r_.factors)
                if (f.name() == name) predicted = f.multiplicity * static_cast<long>(f.spec.dim());
            for (const auto& cl : r_.composites)
                if (cl.name() == name) {
                    predicted = 0;
                    for (std::size_t j : cl.parts)
                        predicted += r_.factors[j].multiplicity * static_cast<long>(r_.factors[j].spec.dim());
                }
            if (predicted < 0) throw std::logic_error("filtration step without a prediction: " + name);
            c.predicted_sum += predicted;
        }
        c.chain = "0 < " + c.chain;
        return c;
    }

private:
    const ClassificationReport& r_;
    MonogenicSpace M_;
    std::map<std::string, Subspace> spaces_;
    std::map<std::string, Ladder> ladders_;
};

}  // namespace

ClassificationCertificate verify_classification(const ClassificationReport& r, std::size_t cap) {
    if (!r.has_prediction()) throw std::invalid_argument("no theorem applies at this (n, k)");
    Verifier v(r);
    ClassificationCertificate cert;
    for (const auto& f : r.factors) cert.factors.push_back(v.check(f, cap));
    for (const auto& c : r.composites) cert.composites.push_back(v.check(c));
    for (const auto& ch : r.filtrations) cert.filtrations.push_back(v.check(ch));
    return cert;
}

}  // namespace bim
