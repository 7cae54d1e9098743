// SPDX-License-Identifier: Apache-2.0
#include "bim/ladders.hpp"

#include <stdexcept>

namespace bim {

long LadderContext::t(int axis) const {
    Threshold th = k.t(axis);
    if (!th.is_finite()) throw LadderError("threshold t" + std::to_string(axis) + " is infinite");
    return th.value();
}

namespace {

using Ctx = LadderContext;

long floordiv2(long a) { return a >= 0 ? a / 2 : -((1 - a) / 2); }

Rational half() { return frac(1, 2); }
Rational alt(long i) { return Rational(sign_pow(i)); }

Integer binomial(long top, long bottom) {
    if (top < 0 || bottom < 0) throw LadderError("negative binomial argument");
    if (bottom > top) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
    return r;
}

Mat2 S(int a) { return Mat2::sigma(a); }
const GaussRational I = GaussRational::i();

// Tables share their first two rows: sigma_s^j sigma_u when h, i are odd and sigma_s^j when both are even.
std::vector<CoefficientRule> table(int s, int u, CoefficientRule m1, CoefficientRule m2) {
    return {{1, 1, -1, S(u), s}, {0, 0, -1, Mat2::identity(), s}, std::move(m1), std::move(m2)};
}

auto fixed_upper(long (*f)(const Ctx&)) {
    return [f](const Ctx& c, long, long, long) { return f(c); };
}

BracketRole lead(int axis, long (*upper)(const Ctx&)) {
    return {axis, fixed_upper(upper), [](const Ctx&, long, long, long j) { return j; }};
}
BracketRole middle(int axis) {
    return {axis, [](const Ctx&, long i, long, long) { return i; }, [](const Ctx&, long, long h, long) { return h; }};
}
BracketRole tail(int axis, long (*upper)(const Ctx&)) {
    return {axis, fixed_upper(upper), [](const Ctx& c, long, long h, long j) { return c.n - h - j; }};
}

long up_n(const Ctx& c) { return c.n; }
long up_n_t1(const Ctx& c) { return c.n - c.t(1); }
long up_n_t2(const Ctx& c) { return c.n - c.t(2); }
long up_n_t3(const Ctx& c) { return c.n - c.t(3); }

const Rational& K(const Ctx& c, int a) { return c.k[a]; }

std::vector<LadderCase> make_cases() {
    std::vector<LadderCase> v;

    // Type I: n < min{t1, t3}.
    for (int parity : {1, 0}) {
        LadderCase L;
        L.id = parity ? "I.odd" : "I.even";
        L.parity = parity;
        L.hypothesis_text = "n < min{t1,t3}";
        L.hypothesis = [](long n, const Multiplicity& k) { return lt(n, k.t(1)) && lt(n, k.t(3)); };
        L.top = [](const Ctx& c) { return c.n; };
        L.h_sign = parity ? 1 : -1;
        L.j_sign = 1;
        L.j_lower = [](const Ctx&) { return 0L; };
        L.j_upper = [](const Ctx& c, long h) { return c.n - h; };
        L.brackets = {lead(1, up_n), middle(2), tail(3, up_n)};
        if (parity)
            L.table = table(2, 1, {1, 0, 1, I * I * I * S(3)}, {0, 1, 0, -Mat2::identity()});
        else
            L.table = table(2, 1, {1, 0, 0, S(1)}, {0, 1, 1, -S(2)});
        L.raise = 1;
        L.lower = 2;
        L.theta = [](const Ctx& c, long i) -> Rational { return alt(i) * (K(c, 2) + K(c, 3) + i + half()); };
        if (parity) {
            L.theta_star = [](const Ctx& c, long i) -> Rational { return -alt(i) * (K(c, 1) + K(c, 3) + c.n - i + half()); };
            L.phi = [](const Ctx& c, long i) -> Rational {
                if (i % 2 == 0) return Rational(i * (c.n - i + 1));
                return (i + 2 * K(c, 2)) * (c.n - i + 2 * K(c, 1) + 1);
            };
        } else {
            L.theta_star = [](const Ctx& c, long i) -> Rational { return alt(i) * (K(c, 1) + K(c, 3) + c.n - i + half()); };
            L.phi = [](const Ctx& c, long i) -> Rational {
                if (i % 2 == 0) return i * (i - c.n - 2 * K(c, 1) - 1);
                return (i + 2 * K(c, 2)) * (i - c.n - 1);
            };
        }
        v.push_back(std::move(L));
    }

    // Type III with lead axis x1: t1 <= n < t1 + t2.
    for (int parity : {1, 0}) {
        LadderCase L;
        L.id = parity ? "III.x1.odd" : "III.x1.even";
        L.parity = parity;
        L.hypothesis_text = "t1 <= n < t1+t2";
        L.hypothesis = [](long n, const Multiplicity& k) { return le(k.t(1), n) && lt(n, k.t(1) + k.t(2)); };
        L.top = [](const Ctx& c) { return c.n - c.t(1); };
        L.h_sign = parity ? -1 : 1;
        L.j_sign = -1;
        L.j_lower = [](const Ctx& c) { return c.t(1); };
        L.j_upper = [](const Ctx& c, long h) { return c.n - h; };
        L.brackets = {lead(1, up_n), middle(3), tail(2, up_n_t1)};
        if (parity)
            L.table = table(3, 1, {1, 0, 1, I * S(2)}, {0, 1, 0, -Mat2::identity()});
        else
            L.table = table(3, 1, {1, 0, 0, S(1)}, {0, 1, 1, -S(3)});
        L.raise = 1;
        L.lower = 3;
        L.theta = [](const Ctx& c, long i) -> Rational { return alt(i) * (K(c, 2) + K(c, 3) + i + half()); };
        if (parity) {
            L.theta_star = [](const Ctx& c, long i) -> Rational { return -alt(i) * (c.n + K(c, 1) + K(c, 2) - i + half()); };
            L.phi = [](const Ctx& c, long i) -> Rational {
                if (i % 2 == 0) return Rational(i * (c.n - i + 1));
                return (i + 2 * K(c, 3)) * (c.n - i + 2 * K(c, 1) + 1);
            };
        } else {
            L.theta_star = [](const Ctx& c, long i) -> Rational { return alt(i) * (c.n + K(c, 1) + K(c, 2) - i + half()); };
            L.phi = [](const Ctx& c, long i) -> Rational {
                if (i % 2 == 0) return i * (i - c.n - 2 * K(c, 1) - 1);
                return (i + 2 * K(c, 3)) * (i - c.n - 1);
            };
        }
        v.push_back(std::move(L));
    }

    // Type III with lead axis x3: t3 <= n < t2 + t3.
    for (int parity : {1, 0}) {
        LadderCase L;
        L.id = parity ? "III.x3.odd" : "III.x3.even";
        L.parity = parity;
        L.hypothesis_text = "t3 <= n < t2+t3";
        L.hypothesis = [](long n, const Multiplicity& k) { return le(k.t(3), n) && lt(n, k.t(2) + k.t(3)); };
        L.top = [](const Ctx& c) { return c.n - c.t(3); };
        L.h_sign = parity ? 1 : -1;
        L.j_sign = 1;
        L.j_lower = [](const Ctx& c) { return c.t(3); };
        L.j_upper = [](const Ctx& c, long h) { return c.n - h; };
        L.brackets = {lead(3, up_n), middle(1), tail(2, up_n_t3)};
        if (parity)
            L.table = table(1, 3, {1, 0, 1, I * I * I * S(2)}, {0, 1, 0, -Mat2::identity()});
        else
            L.table = table(1, 3, {1, 0, 0, S(3)}, {0, 1, 1, -S(1)});
        L.raise = 3;
        L.lower = 1;
        L.theta = [](const Ctx& c, long i) -> Rational { return alt(i) * (K(c, 1) + K(c, 2) + i + half()); };
        if (parity) {
            L.theta_star = [](const Ctx& c, long i) -> Rational { return -alt(i) * (K(c, 2) + K(c, 3) + c.n - i + half()); };
            L.phi = [](const Ctx& c, long i) -> Rational {
                if (i % 2 == 0) return Rational(i * (c.n - i + 1));
                return (i + 2 * K(c, 1)) * (c.n - i + 2 * K(c, 3) + 1);
            };
        } else {
            L.theta_star = [](const Ctx& c, long i) -> Rational { return alt(i) * (c.n + K(c, 2) + K(c, 3) - i + half()); };
            L.phi = [](const Ctx& c, long i) -> Rational {
                if (i % 2 == 0) return i * (i - c.n - 2 * K(c, 3) - 1);
                return (i + 2 * K(c, 1)) * (i - c.n - 1);
            };
        }
        v.push_back(std::move(L));
    }

    // Type IV families. (a, b) are the two thresholds, m the middle axis, s the power axis, u the odd factor.
    struct IV {
        const char* name;
        int lead_axis, mid_axis, tail_axis;  // lead upper n - t_tail, tail upper n - t_lead
        int s, u;
        int raise, lower;
        int p, q, r;  // theta = (-1)^i (k_p - k_q - i - 1/2), theta* uses k_r + k_p ... see below
    };
    // theta_i = (-1)^i (k_tail - k_mid - i - 1/2); theta*_i uses k_lead + k_tail.
    // phi (odd n): even i -> i(i - 2k_lead - 2k_tail - n - 1), odd i -> (i + 2k_mid)(i - 2k_tail - n - 1).
    // phi (even n): even i -> i(2k_tail + n - i + 1), odd i -> (i + 2k_mid)(2k_lead + 2k_tail + n - i + 1).
    const IV fam[3] = {{"IV.x1x3", 1, 2, 3, 2, 1, 1, 2, 0, 0, 0},
                       {"IV.x1x2", 2, 3, 1, 3, 2, 2, 3, 0, 0, 0},
                       {"IV.x2x3", 3, 1, 2, 1, 3, 3, 1, 0, 0, 0}};
    long (*uppers[4])(const Ctx&) = {nullptr, up_n_t1, up_n_t2, up_n_t3};
    for (const IV& f : fam) {
        for (int parity : {1, 0}) {
            LadderCase L;
            L.id = std::string(f.name) + (parity ? ".odd" : ".even");
            L.parity = parity;
            const int a = f.lead_axis, m = f.mid_axis, b = f.tail_axis;
            // For IV.x1x2 the displayed thresholds are t2 (lead lower bound) and t1 (lead upper).
            // lead bracket: [x_a]^{n - t_b}_j with j >= t_a; tail: [x_b]^{n - t_a}_{n-h-j}.
            L.hypothesis_text = "n >= t" + std::to_string(std::min(a, b)) + "+t" + std::to_string(std::max(a, b));
            L.hypothesis = [a, b](long n, const Multiplicity& k) { return le(k.t(a) + k.t(b), n); };
            L.top = [a, b](const Ctx& c) { return c.n - c.t(a) - c.t(b); };
            L.h_sign = parity ? 1 : -1;
            L.j_sign = 1;
            L.j_lower = [a](const Ctx& c) { return c.t(a); };
            L.j_upper = [b](const Ctx& c, long h) { return c.n - c.t(b) - h; };
            L.brackets = {lead(a, uppers[b]), middle(m), tail(b, uppers[a])};
            if (parity)
                L.table = table(f.s, f.u, {0, 1, 1, S(f.s)}, {1, 0, 0, -S(f.u)});
            else
                L.table = table(f.s, f.u, {1, 0, 1, I * S(6 - f.s - f.u)}, {0, 1, 0, Mat2::identity()});
            L.raise = f.raise;
            L.lower = f.lower;
            L.theta = [m, b](const Ctx& c, long i) -> Rational { return alt(i) * (K(c, b) - K(c, m) - i - half()); };
            if (parity) {
                L.theta_star = [a, b](const Ctx& c, long i) -> Rational {
                    return -alt(i) * (K(c, a) + K(c, b) + c.n - i + half());
                };
                L.phi = [a, m, b](const Ctx& c, long i) -> Rational {
                    if (i % 2 == 0) return i * (i - 2 * K(c, a) - 2 * K(c, b) - c.n - 1);
                    return (i + 2 * K(c, m)) * (i - 2 * K(c, b) - c.n - 1);
                };
            } else {
                L.theta_star = [a, b](const Ctx& c, long i) -> Rational {
                    return alt(i) * (K(c, a) + K(c, b) + c.n - i + half());
                };
                L.phi = [a, m, b](const Ctx& c, long i) -> Rational {
                    if (i % 2 == 0) return i * (2 * K(c, b) + c.n - i + 1);
                    return (i + 2 * K(c, m)) * (2 * K(c, a) + 2 * K(c, b) + c.n - i + 1);
                };
            }
            v.push_back(std::move(L));
        }
    }
    return v;
}

}  // namespace

const std::vector<LadderCase>& ladder_cases() {
    static const std::vector<LadderCase> cases = make_cases();
    return cases;
}

const LadderCase& ladder_case(const std::string& id) {
    for (const auto& c : ladder_cases())
        if (c.id == id) return c;
    throw std::invalid_argument("unknown ladder case '" + id + "'");
}

std::string LadderSpec::str() const {
    return rotation == 0 ? case_id : case_id + "@rot" + std::to_string(rotation);
}

int rotate_axis(int axis, int rotation) {
    for (int r = 0; r < rotation; ++r) axis = axis % 3 + 1;
    return axis;
}

Multiplicity rotate_source(const Multiplicity& k, int rotation) {
    return {k[rotate_axis(1, rotation)], k[rotate_axis(2, rotation)], k[rotate_axis(3, rotation)]};
}

const Mat2& rotation_matrix() {
    static const Mat2 U = [] {
        const GaussRational h = frac(1, 2);
        for (int s : {1, -1}) {
            Mat2 c = Mat2::identity();
            for (int a = 1; a <= 3; ++a) c = c - GaussRational(s) * GaussRational::i() * Mat2::sigma(a);
            c = h * c;
            Mat2 inv = c.inverse();
            bool ok = true;
            for (int a = 1; a <= 3; ++a) ok = ok && (c * Mat2::sigma(a) * inv == Mat2::sigma(a % 3 + 1));
            if (ok) return c;
        }
        throw std::logic_error("no exact cyclic rotation matrix");
    }();
    return U;
}

Poly rotate_poly(const Poly& p, int rotation) {
    return p.map_terms([rotation](const Monomial& m, const GaussRational& c) {
        Monomial r{};
        for (int a = 1; a <= 3; ++a) r[rotate_axis(a, rotation) - 1] = m[a - 1];
        return std::pair{r, c};
    });
}

bool ladder_applies(const LadderSpec& spec, long n, const Multiplicity& k) {
    const LadderCase& L = ladder_case(spec.case_id);
    if (n < 0 || n % 2 != L.parity) return false;
    return L.hypothesis(n, rotate_source(k, spec.rotation));
}

Ladder build_ladder(const LadderSpec& spec, long n, const Multiplicity& k) {
    const LadderCase& L = ladder_case(spec.case_id);
    if (spec.rotation < 0 || spec.rotation > 2) throw std::invalid_argument("rotation must be 0, 1 or 2");
    if (!ladder_applies(spec, n, k))
        throw LadderError(spec.str() + ": hypothesis fails (n " + (L.parity ? "odd" : "even") + ", " +
                          L.hypothesis_text + " on the source multiplicity)");
    Ctx c{n, rotate_source(k, spec.rotation)};
    Ladder out;
    out.spec = spec;
    out.n = n;
    out.k = k;
    out.raise = rotate_axis(L.raise, spec.rotation);
    out.lower = rotate_axis(L.lower, spec.rotation);

    Mat2 U = Mat2::identity();
    for (int r = 0; r < spec.rotation; ++r) U = rotation_matrix() * U;

    const long top = L.top(c);
    for (long i = 0; i <= top; ++i) {
        MatPoly p;
        for (long h = 0; h <= i; ++h) {
            const long jlo = L.j_lower(c), jhi = L.j_upper(c, h);
            for (long j = jlo; j <= jhi; ++j) {
                Mat2 coef;
                bool hit = false;
                for (const auto& rule : L.table) {
                    if (rule.h_odd != (h & 1) || rule.i_odd != (i & 1)) continue;
                    if (rule.j_odd >= 0 && rule.j_odd != (j & 1)) continue;
                    coef = rule.power_axis ? Mat2::sigma(rule.power_axis).pow(static_cast<unsigned>(j)) * rule.fixed
                                           : rule.fixed;
                    hit = true;
                    break;
                }
                if (!hit) continue;
                GaussRational s = half_power_of_minus_one(L.h_sign * h) * half_power_of_minus_one(L.j_sign * j);
                if (L.binomial) {
                    // The first argument counts down from the lead bracket's upper index.
                    const long m = floordiv2(i - h);
                    const long lead_up = L.brackets[0].upper(c, i, h, j);
                    s *= GaussRational(Rational(binomial(floordiv2(lead_up - i - j) + m, m)));
                }
                if (s.is_zero()) continue;
                Monomial mono{0, 0, 0};
                for (const auto& br : L.brackets) {
                    const long up = br.upper(c, i, h, j), lo = br.lower(c, i, h, j);
                    if (lo < 0 || lo > up)
                        throw LadderError(spec.str() + ": bracket range [" + std::to_string(lo) + "," +
                                          std::to_string(up) + "] on x" + std::to_string(br.axis));
                    s *= GaussRational(bracket_scalar(br.axis, static_cast<int>(lo), static_cast<int>(up), c.k));
                    mono[br.axis - 1] += static_cast<int>(lo);
                }
                if (s.is_zero()) continue;
                p += MatPoly::tensor(s * coef, Poly::monomial(mono));
            }
        }
        if (spec.rotation) {
            for (auto& e : p.e) e = rotate_poly(e, spec.rotation);
            p = U * p;
        }
        out.elements.push_back(std::move(p));
        out.theta.push_back(L.theta(c, i));
        out.theta_star.push_back(L.theta_star(c, i));
        out.phi.push_back(i == 0 ? Rational(0) : L.phi(c, i));
    }
    return out;
}

MatPoly apply_generator(int which, const MatPoly& p, const Multiplicity& k) {
    return MatPoly::from_columns(apply_XYZ(which, p.column(0), k), apply_XYZ(which, p.column(1), k));
}

namespace {

MatPoly dirac(const MatPoly& p, const Multiplicity& k) {
    return MatPoly::from_columns(apply_dirac(p.column(0), k), apply_dirac(p.column(1), k));
}

}  // namespace

LadderCertificate verify_ladder(const Ladder& L) {
    LadderCertificate cert;
    const std::string tag = L.spec.str() + " n=" + std::to_string(L.n) + " k=" + L.k.str();
    const std::size_t len = L.elements.size();
    for (std::size_t i = 0; i < len; ++i) {
        const MatPoly& p = L.elements[i];
        if (!dirac(p, L.k).is_zero()) {
            cert.annihilated = false;
            cert.failures.push_back(tag + ": D(p_" + std::to_string(i) + ") != 0");
        }
        MatPoly up = apply_generator(L.raise, p, L.k) - GaussRational(L.theta[i]) * p;
        MatPoly want_up = i + 1 < len ? L.elements[i + 1] : MatPoly{};
        if (up != want_up) {
            cert.raise_ok = false;
            cert.failures.push_back(tag + ": raising relation fails at i=" + std::to_string(i));
        }
        MatPoly down = apply_generator(L.lower, p, L.k) - GaussRational(L.theta_star[i]) * p;
        MatPoly want_down = i > 0 ? GaussRational(L.phi[i]) * L.elements[i - 1] : MatPoly{};
        if (down != want_down) {
            cert.lower_ok = false;
            cert.failures.push_back(tag + ": lowering relation fails at i=" + std::to_string(i));
        }
    }
    // Left Mat_2 independence: the 2*len rows (as pairs of polynomials) are independent over C.
    if (len) {
        const int n = static_cast<int>(L.n);
        GradedBasis amb(n, kAllVars);
        std::vector<Vec> rows;
        for (const auto& p : L.elements)
            for (int r = 0; r < 2; ++r) rows.push_back(amb.coordinates(SpinorPoly{p.at(r, 0), p.at(r, 1)}));
        if (rank(Matrix::from_rows(amb.size(), rows)) != 2 * len) {
            cert.independent = false;
            cert.failures.push_back(tag + ": elements are dependent over Mat_2");
        }
    }
    return cert;
}

std::vector<SpinorPoly> ladder_column(const Ladder& L, int column, long from, long to) {
    std::vector<SpinorPoly> out;
    for (long i = std::max(0L, from); i <= to && i < static_cast<long>(L.elements.size()); ++i)
        out.push_back(L.elements[i].column(column));
    return out;
}

std::array<std::vector<SpinorPoly>, 2> column_split(const Ladder& L) {
    const long last = static_cast<long>(L.elements.size()) - 1;
    return {ladder_column(L, 0, 0, last), ladder_column(L, 1, 0, last)};
}

}  // namespace bim
