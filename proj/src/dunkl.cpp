// SPDX-License-Identifier: Apache-2.0
#include "bim/dunkl.hpp"

#include <sstream>
#include <stdexcept>

namespace bim {

Threshold min(const Threshold& a, const Threshold& b) {
    if (!a.is_finite()) return b;
    if (!b.is_finite()) return a;
    return a.value() <= b.value() ? a : b;
}

Threshold max(const Threshold& a, const Threshold& b) {
    if (!a.is_finite() || !b.is_finite()) return Threshold::infinity();
    return a.value() >= b.value() ? a : b;
}

Threshold Multiplicity::t(int axis) const {
    Rational twice = 2 * (*this)[axis];
    if (twice.get_den() != 1) return Threshold::infinity();
    const Integer& v = twice.get_num();
    if (v < 0 && mpz_odd_p(v.get_mpz_t())) return Threshold::finite(Integer(-v).get_si());
    return Threshold::infinity();
}

std::string Multiplicity::str() const {
    return to_string(k[0]) + "," + to_string(k[1]) + "," + to_string(k[2]);
}

Multiplicity parse_multiplicity(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 3) throw std::invalid_argument("multiplicity needs three comma-separated rationals");
    return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
}

Rational m_value(int axis, long n, const Multiplicity& k) {
    if (n % 2 == 0) return Rational(n);
    return Rational(n) + 2 * k[axis];
}

Poly reflect(VarSet axes, const Poly& f) {
    return f.map_terms([axes](const Monomial& m, const GaussRational& c) {
        int s = 0;
        for (int a = 0; a < 3; ++a)
            if (axes & (1u << a)) s += m[a];
        return std::pair{m, s % 2 ? -c : c};
    });
}

SpinorPoly reflect(VarSet axes, const SpinorPoly& f) { return {reflect(axes, f.up), reflect(axes, f.down)}; }

Poly apply_T(int axis, const Poly& f, const Multiplicity& k) {
    Poly r;
    for (const auto& [m, c] : f.terms()) {
        int e = m[axis - 1];
        if (e == 0) continue;
        Monomial m2 = m;
        --m2[axis - 1];
        r.add_term(m2, c * GaussRational(m_value(axis, e, k)));
    }
    return r;
}

SpinorPoly apply_T(int axis, const SpinorPoly& f, const Multiplicity& k) {
    return {apply_T(axis, f.up, k), apply_T(axis, f.down, k)};
}

Rational bracket_scalar(int axis, int i, int j, const Multiplicity& k) {
    if (i > j) throw std::invalid_argument("bracket requires lower <= upper");
    Rational s(1);
    for (int h = i + 1; h <= j; ++h) s *= m_value(axis, h, k);
    return s;
}

Poly bracket(int axis, int i, int j, const Multiplicity& k) {
    return Poly::var(axis, i) * GaussRational(bracket_scalar(axis, i, j, k));
}

SpinorPoly apply_dirac(const SpinorPoly& f, const Multiplicity& k, int omit) {
    SpinorPoly r;
    for (int a = 1; a <= 3; ++a) {
        if (a == omit) continue;
        r += Mat2::sigma(a) * apply_T(a, f, k);
    }
    return r;
}

}  // namespace bim
