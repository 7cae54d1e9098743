// SPDX-License-Identifier: Apache-2.0
#include "bim/irreps.hpp"

#include <stdexcept>

namespace bim {

std::string IrrepSpec::str() const {
    std::string s = std::string(family == Family::E ? "E" : "O") + "_" + std::to_string(d) + "(" + to_string(a) +
                    "," + to_string(b) + "," + to_string(c) + ")";
    if (!(twist == TwistElement::identity())) s += "^" + twist.str();
    return s;
}

IrrepSpec make_spec(Family f, long d, Rational a, Rational b, Rational c, TwistElement g) {
    if (d < 0) throw std::invalid_argument("d must be nonnegative");
    if (f == Family::E && d % 2 == 0) throw std::invalid_argument("E_d needs odd d");
    if (f == Family::O && d % 2 != 0) throw std::invalid_argument("O_d needs even d");
    return {f, d, std::move(a), std::move(b), std::move(c), g};
}

std::array<Rational, 3> irrep_central_scalars(const IrrepSpec& s) {
    const Rational &a = s.a, &b = s.b, &c = s.c;
    if (s.family == Family::E) {
        Rational h = frac(s.d + 1, 2);
        h *= h;
        return {c * c - a * a - b * b + h, a * a - b * b - c * c + h, b * b - c * c - a * a + h};
    }
    return {2 * a * b - c * (s.d + 1), 2 * b * c - a * (s.d + 1), 2 * c * a - b * (s.d + 1)};
}

ModuleMatrices build_irrep(const IrrepSpec& s) {
    IrrepSpec checked = make_spec(s.family, s.d, s.a, s.b, s.c, s.twist);
    const long d = checked.d;
    const std::size_t N = checked.dim();
    Matrix X(N, N), Y(N, N);
    for (long i = 0; i <= d; ++i) {
        X(i, i) = GaussRational(Rational(sign_pow(i)) * (2 * s.a - d + 2 * i) / 2);
        Y(i, i) = GaussRational(Rational(sign_pow(i)) * (2 * s.b - d + 2 * i) / 2);
        if (i < d) X(i + 1, i) = 1;
    }
    for (long i = 1; i <= d; ++i) {
        Rational phi;
        if (s.family == Family::E) {
            if (i % 2 == 0) {
                phi = Rational(i * (d - i + 1));
            } else {
                Rational t = 2 * s.a + 2 * s.b - d + 2 * i - 1;
                phi = s.c * s.c - t * t / 4;
            }
        } else if (i % 2 == 0) {
            phi = Rational(i) * (d + 1 - 2 * i - 2 * s.a - 2 * s.b - 2 * s.c) / 2;
        } else {
            phi = Rational(i - d - 1) * (d + 1 - 2 * i - 2 * s.a - 2 * s.b + 2 * s.c) / 2;
        }
        Y(i - 1, i) = GaussRational(phi);
    }
    ModuleMatrices m;
    m.provenance = checked.str();
    m.g[0] = X;
    m.g[1] = Y;
    m.g[2] = anticommutator(X, Y) - GaussRational(irrep_central_scalars(s)[0]) * Matrix::identity(N);
    if (s.twist == TwistElement::identity()) return m;
    ModuleMatrices t = twist(m, s.twist);
    t.provenance = checked.str();
    return t;
}

std::array<GaussRational, 3> spec_traces(const IrrepSpec& s) {
    std::array<GaussRational, 3> tr;
    if (s.family == Family::E)
        tr.fill(GaussRational(frac(-(s.d + 1), 2)));
    else
        tr = {GaussRational(s.a), GaussRational(s.b), GaussRational(s.c)};
    return twist_traces(tr, s.twist);
}

std::array<GaussRational, 3> spec_central(const IrrepSpec& s) {
    auto c = irrep_central_scalars(s);
    return twist_central({GaussRational(c[0]), GaussRational(c[1]), GaussRational(c[2])}, s.twist);
}

bool is_irreducible_by_criterion(const IrrepSpec& s) {
    const Rational &a = s.a, &b = s.b, &c = s.c;
    std::array<Rational, 4> sums;
    long lo, hi;
    Rational base;
    if (s.family == Family::E) {
        sums = {a + b + c, -a + b + c, a - b + c, a + b - c};
        base = frac(s.d - 1, 2);
        lo = 0;
        hi = s.d - 1;
    } else {
        sums = {a + b + c, a - b - c, -a + b - c, -a - b + c};
        base = frac(s.d + 1, 2);
        lo = 2;
        hi = s.d;
    }
    for (long i = lo; i <= hi; i += 2)
        for (const auto& v : sums)
            if (v == base - i) return false;
    return true;
}

namespace {

Vec flatten(const Matrix& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return v;
}

}  // namespace

namespace {

// Reduced echelon rows grown one vector at a time.
class IncrementalSpan {
public:
    // Returns false when v already lies in the span.
    bool insert(Vec v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            GaussRational f = v[pivots_[r]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
        }
        std::size_t p = 0;
        while (p < v.size() && v[p].is_zero()) ++p;
        if (p == v.size()) return false;
        GaussRational inv = v[p].inverse();
        for (auto& x : v) x *= inv;
        for (auto& row : rows_) {
            GaussRational f = row[p];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!v[j].is_zero()) row[j] -= f * v[j];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }
    std::size_t dim() const { return rows_.size(); }

private:
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace

std::size_t generated_algebra_dim(const ModuleMatrices& m, std::size_t cap) {
    const std::size_t N = m.dim();
    if (N > cap) throw CapExceeded("module dimension " + std::to_string(N) + " exceeds cap " + std::to_string(cap));
    if (N == 0) return 0;
    // Breadth-first over words; only words that enlarged the span are extended.
    IncrementalSpan span;
    std::vector<Matrix> frontier{Matrix::identity(N)};
    span.insert(flatten(frontier[0]));
    while (!frontier.empty() && span.dim() < N * N) {
        std::vector<Matrix> next;
        for (const auto& w : frontier)
            for (const auto& g : m.g) {
                Matrix p = g * w;
                if (span.insert(flatten(p))) next.push_back(std::move(p));
            }
        frontier = std::move(next);
    }
    return span.dim();
}

bool is_irreducible_burnside(const ModuleMatrices& m, std::size_t cap) {
    const std::size_t N = m.dim();
    return N > 0 && generated_algebra_dim(m, cap) == N * N;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
    Rational r(sqrt(Integer(q.get_num())), sqrt(Integer(q.get_den())));
    r.canonicalize();
    return r;
}

namespace {

std::optional<std::array<GaussRational, 3>> central_scalars_of(const ModuleMatrices& m) {
    std::array<GaussRational, 3> out;
    const Central cs[3] = {Central::Kappa, Central::Lambda, Central::Mu};
    for (int j = 0; j < 3; ++j)
        if (!central_element(m, cs[j]).is_scalar(&out[j])) return std::nullopt;
    return out;
}

bool same_invariants(const ModuleMatrices& u, const ModuleMatrices& v) {
    if (u.dim() != v.dim()) return false;
    for (int j = 0; j < 3; ++j)
        if (u.g[j].trace() != v.g[j].trace()) return false;
    if ((u.X() * u.Y()).trace() != (v.X() * v.Y()).trace()) return false;
    return central_scalars_of(u) == central_scalars_of(v);
}

}  // namespace

IrrepSpec identify(const ModuleMatrices& m, std::size_t cap) {
    if (!is_irreducible_burnside(m, cap)) throw IdentifyFailure("module is not irreducible");
    const long d = static_cast<long>(m.dim()) - 1;
    IrrepSpec out;
    if (d % 2 == 0) {
        std::array<Rational, 3> abc;
        for (int j = 0; j < 3; ++j) {
            GaussRational t = m.g[j].trace();
            if (!t.is_real()) throw IdentifyFailure("non-real trace");
            abc[j] = t.re();
        }
        out = make_spec(Family::O, d, abc[0], abc[1], abc[2]);
    } else {
        const Rational h = frac(d + 1, 2);
        bool found = false;
        for (int e1 : {1, -1}) {
            for (int e2 : {1, -1}) {
                TwistElement eps({e1, e2}, {1, 2, 3});
                ModuleMatrices v = twist(m, eps);
                if (v.X().trace() != GaussRational(-h) || v.Y().trace() != GaussRational(-h)) continue;
                auto cs = central_scalars_of(v);
                if (!cs) continue;
                // kappa + mu, lambda + kappa, mu + lambda give -2(p^2 - h^2) for p = a, b, c.
                const GaussRational pairs[3] = {(*cs)[0] + (*cs)[2], (*cs)[1] + (*cs)[0], (*cs)[2] + (*cs)[1]};
                std::array<Rational, 3> abc;
                bool ok = true;
                for (int j = 0; j < 3 && ok; ++j) {
                    if (!pairs[j].is_real()) {
                        ok = false;
                        break;
                    }
                    auto r = rational_sqrt(h * h - pairs[j].re() / 2);
                    if (!r) ok = false;
                    else abc[j] = *r;
                }
                if (!ok) continue;
                out = make_spec(Family::E, d, abc[0], abc[1], abc[2], eps);
                found = true;
                break;
            }
            if (found) break;
        }
        if (!found) throw IdentifyFailure("no rational E-parameters match the traces and central scalars");
    }
    if (!same_invariants(build_irrep(out), m)) throw IdentifyFailure("rebuilt module has different invariants");
    return out;
}

}  // namespace bim
