// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bim/poly.hpp"

#include <optional>
#include <string>

namespace bim {

// Odd positive threshold or infinity. Infinity exceeds every integer.
class Threshold {
public:
    Threshold() = default;
    static Threshold finite(long v) { return Threshold(v); }
    static Threshold infinity() { return Threshold(); }

    bool is_finite() const { return value_.has_value(); }
    long value() const { return *value_; }

    friend bool operator==(const Threshold&, const Threshold&) = default;
    friend Threshold operator+(const Threshold& a, const Threshold& b) {
        if (!a.is_finite() || !b.is_finite()) return infinity();
        return finite(a.value() + b.value());
    }
    std::string str() const { return is_finite() ? std::to_string(*value_) : "inf"; }

private:
    explicit Threshold(long v) : value_(v) {}
    std::optional<long> value_;
};

// n < t, with t possibly infinite.
inline bool lt(long n, const Threshold& t) { return !t.is_finite() || n < t.value(); }
inline bool le(const Threshold& t, long n) { return t.is_finite() && t.value() <= n; }
Threshold min(const Threshold& a, const Threshold& b);
Threshold max(const Threshold& a, const Threshold& b);

struct Multiplicity {
    std::array<Rational, 3> k{};

    Multiplicity() = default;
    Multiplicity(Rational k1, Rational k2, Rational k3) : k{std::move(k1), std::move(k2), std::move(k3)} {}

    const Rational& operator[](int axis) const { return k[axis - 1]; }
    Threshold t(int axis) const;
    Rational sum() const { return k[0] + k[1] + k[2]; }
    std::string str() const;
};

// Parses "k1,k2,k3".
Multiplicity parse_multiplicity(const std::string& s);

// n + (1 - (-1)^n) k_axis
Rational m_value(int axis, long n, const Multiplicity& k);

Poly reflect(VarSet axes, const Poly& f);
SpinorPoly reflect(VarSet axes, const SpinorPoly& f);

Poly apply_T(int axis, const Poly& f, const Multiplicity& k);
SpinorPoly apply_T(int axis, const SpinorPoly& f, const Multiplicity& k);

// prod_{h=i+1}^{j} m_axis^{(h)} * x_axis^i
Poly bracket(int axis, int i, int j, const Multiplicity& k);
// The scalar part of bracket().
Rational bracket_scalar(int axis, int i, int j, const Multiplicity& k);

// Sum over included axes of sigma_a (x) T_a; omit in 1..3 drops that axis.
SpinorPoly apply_dirac(const SpinorPoly& f, const Multiplicity& k, int omit = 0);

}  // namespace bim
