// SPDX-License-Identifier: Apache-2.0
#include "bim/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace bim {

Poly Poly::monomial(const Monomial& m, const GaussRational& c) {
    Poly p;
    p.add_term(m, c);
    return p;
}

Poly Poly::var(int axis, int power) {
    Monomial m{0, 0, 0};
    m[axis - 1] = power;
    return monomial(m);
}

GaussRational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussRational() : it->second;
}

void Poly::add_term(const Monomial& m, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const GaussRational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    return r;
}

Poly Poly::shifted(const Monomial& s) const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m[0] + s[0], m[1] + s[1], m[2] + s[2]}, c);
    return r;
}

Poly Poly::map_terms(
    const std::function<std::pair<Monomial, GaussRational>(const Monomial&, const GaussRational&)>& f) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        auto [m2, c2] = f(m, c);
        r.add_term(m2, c2);
    }
    return r;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        std::string cs = to_string(c);
        if (!c.is_real()) cs = "(" + cs + ")";
        if (!first) {
            if (cs[0] == '-')
                os << " - " << cs.substr(1);
            else
                os << " + " << cs;
        } else {
            os << cs;
        }
        first = false;
        for (int a = 0; a < 3; ++a)
            if (m[a] > 0) os << "*x" << (a + 1) << "^" << m[a];
    }
    return os.str();
}

SpinorPoly operator*(const Mat2& m, const SpinorPoly& f) {
    SpinorPoly r;
    r.up = f.up * m(0, 0) + f.down * m(0, 1);
    r.down = f.up * m(1, 0) + f.down * m(1, 1);
    return r;
}

std::string to_string(const SpinorPoly& f) {
    return "{up: " + to_string(f.up) + ", down: " + to_string(f.down) + "}";
}

MatPoly MatPoly::tensor(const Mat2& m, const Poly& p) {
    MatPoly r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.at(i, j) = p * m(i, j);
    return r;
}

bool MatPoly::is_zero() const {
    for (const auto& p : e)
        if (!p.is_zero()) return false;
    return true;
}

MatPoly MatPoly::from_columns(const SpinorPoly& c0, const SpinorPoly& c1) {
    MatPoly r;
    r.at(0, 0) = c0.up;
    r.at(1, 0) = c0.down;
    r.at(0, 1) = c1.up;
    r.at(1, 1) = c1.down;
    return r;
}

MatPoly& MatPoly::operator+=(const MatPoly& o) {
    for (int j = 0; j < 4; ++j) e[j] += o.e[j];
    return *this;
}

MatPoly& MatPoly::operator-=(const MatPoly& o) {
    for (int j = 0; j < 4; ++j) e[j] -= o.e[j];
    return *this;
}

MatPoly operator*(const GaussRational& s, const MatPoly& m) {
    MatPoly r = m;
    for (auto& p : r.e) p *= s;
    return r;
}

MatPoly operator*(const Mat2& a, const MatPoly& m) {
    MatPoly r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.at(i, j) = m.at(0, j) * a(i, 0) + m.at(1, j) * a(i, 1);
    return r;
}

std::string to_string(const MatPoly& m) {
    return "[[" + to_string(m.at(0, 0)) + ", " + to_string(m.at(0, 1)) + "], [" + to_string(m.at(1, 0)) +
           ", " + to_string(m.at(1, 1)) + "]]";
}

GradedBasis::GradedBasis(int n, VarSet vars) : n_(n), vars_(vars) {
    if (n < 0) throw std::invalid_argument("negative degree");
    if ((vars & kAllVars) == 0 || (vars & ~kAllVars) != 0) throw std::invalid_argument("empty variable set");
    std::vector<int> axes;
    for (int a = 0; a < 3; ++a)
        if (vars & (1u << a)) axes.push_back(a);

    std::vector<Monomial> monos;
    if (axes.size() == 3) {
        for (int a = n; a >= 0; --a)
            for (int b = n - a; b >= 0; --b) monos.push_back({a, b, n - a - b});
    } else if (axes.size() == 2) {
        // alpha_n order: increasing exponent of the lower-indexed variable.
        for (int i = 0; i <= n; ++i) {
            Monomial m{0, 0, 0};
            m[axes[0]] = i;
            m[axes[1]] = n - i;
            monos.push_back(m);
        }
    } else {
        Monomial m{0, 0, 0};
        m[axes[0]] = n;
        monos.push_back(m);
    }
    for (std::size_t j = 0; j < monos.size(); ++j) slot_index_.emplace(monos[j], j);
    for (int slot = 0; slot < 2; ++slot)
        for (const auto& m : monos) elems_.push_back({slot, m});
}

long GradedBasis::index_of(int slot, const Monomial& m) const {
    auto it = slot_index_.find(m);
    if (it == slot_index_.end()) return -1;
    return static_cast<long>(it->second + (slot == 0 ? 0 : slot_index_.size()));
}

std::vector<GaussRational> GradedBasis::coordinates(const SpinorPoly& f) const {
    std::vector<GaussRational> v(size());
    const Poly* parts[2] = {&f.up, &f.down};
    for (int slot = 0; slot < 2; ++slot)
        for (const auto& [m, c] : parts[slot]->terms()) {
            if (bim::degree(m) != n_) throw std::invalid_argument("degree mismatch in coordinates");
            long j = index_of(slot, m);
            if (j < 0) throw std::invalid_argument("support outside the basis variables");
            v[j] = c;
        }
    return v;
}

SpinorPoly GradedBasis::reconstruct(const std::vector<GaussRational>& v) const {
    if (v.size() != size()) throw std::invalid_argument("coordinate vector length mismatch");
    SpinorPoly f;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        (elems_[j].slot == 0 ? f.up : f.down).add_term(elems_[j].mono, v[j]);
    }
    return f;
}

SpinorPoly GradedBasis::element(std::size_t j) const {
    SpinorPoly f;
    (elems_[j].slot == 0 ? f.up : f.down).add_term(elems_[j].mono, 1);
    return f;
}

GradedBasis enumerate_basis(int n, VarSet vars) { return GradedBasis(n, vars); }

}  // namespace bim
