// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bim/exact.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace bim {

using Vec = std::vector<GaussRational>;

// Exponents of x1, x2, x3.
using Monomial = std::array<int, 3>;

inline int degree(const Monomial& m) { return m[0] + m[1] + m[2]; }

// Descending lexicographic order: higher x1 exponent first, then x2.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

class Poly {
public:
    using Terms = std::map<Monomial, GaussRational, MonomialOrder>;

    Poly() = default;
    Poly(const GaussRational& c) { add_term({0, 0, 0}, c); }
    static Poly monomial(const Monomial& m, const GaussRational& c = 1);
    // x_axis for axis in 1..3.
    static Poly var(int axis, int power = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    GaussRational coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const GaussRational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const GaussRational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const GaussRational& s) { return a *= s; }
    friend Poly operator*(const GaussRational& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Multiply by x1^a x2^b x3^c.
    Poly shifted(const Monomial& m) const;
    // Apply f to every term; f may return a zero coefficient.
    Poly map_terms(const std::function<std::pair<Monomial, GaussRational>(const Monomial&,
                                                                          const GaussRational&)>& f) const;

private:
    Terms terms_;
};

std::string to_string(const Poly& p);

// Element of C^2 (x) R[x1,x2,x3].
struct SpinorPoly {
    Poly up;
    Poly down;

    bool is_zero() const { return up.is_zero() && down.is_zero(); }
    SpinorPoly operator-() const { return {-up, -down}; }
    SpinorPoly& operator+=(const SpinorPoly& o) {
        up += o.up;
        down += o.down;
        return *this;
    }
    SpinorPoly& operator-=(const SpinorPoly& o) {
        up -= o.up;
        down -= o.down;
        return *this;
    }
    friend SpinorPoly operator+(SpinorPoly a, const SpinorPoly& b) { return a += b; }
    friend SpinorPoly operator-(SpinorPoly a, const SpinorPoly& b) { return a -= b; }
    friend SpinorPoly operator*(const GaussRational& s, const SpinorPoly& f) {
        return {f.up * s, f.down * s};
    }
    friend SpinorPoly operator*(const Poly& p, const SpinorPoly& f) { return {p * f.up, p * f.down}; }
    friend SpinorPoly operator*(const Mat2& m, const SpinorPoly& f);
    friend bool operator==(const SpinorPoly& a, const SpinorPoly& b) {
        return a.up == b.up && a.down == b.down;
    }
    friend bool operator!=(const SpinorPoly& a, const SpinorPoly& b) { return !(a == b); }
};

std::string to_string(const SpinorPoly& f);

// Element of Mat2 (x) R[x1,x2,x3].
struct MatPoly {
    std::array<Poly, 4> e{};  // row-major

    Poly& at(int r, int c) { return e[2 * r + c]; }
    const Poly& at(int r, int c) const { return e[2 * r + c]; }

    static MatPoly tensor(const Mat2& m, const Poly& p);
    bool is_zero() const;
    SpinorPoly column(int c) const { return {at(0, c), at(1, c)}; }
    static MatPoly from_columns(const SpinorPoly& c0, const SpinorPoly& c1);

    MatPoly& operator+=(const MatPoly& o);
    MatPoly& operator-=(const MatPoly& o);
    friend MatPoly operator+(MatPoly a, const MatPoly& b) { return a += b; }
    friend MatPoly operator-(MatPoly a, const MatPoly& b) { return a -= b; }
    friend MatPoly operator*(const GaussRational& s, const MatPoly& m);
    friend MatPoly operator*(const Mat2& a, const MatPoly& m);
    friend bool operator==(const MatPoly& a, const MatPoly& b) { return a.e == b.e; }
    friend bool operator!=(const MatPoly& a, const MatPoly& b) { return !(a == b); }
};

std::string to_string(const MatPoly& m);

// Variable subset as a bitmask: bit a-1 set means x_a is present.
using VarSet = unsigned;
inline constexpr VarSet kAllVars = 0b111;
inline VarSet vars_without(int axis) { return kAllVars & ~(1u << (axis - 1)); }

struct BasisElement {
    int slot;  // 0 = up, 1 = down
    Monomial mono;
    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

// Ordered basis of C^2 (x) R[vars]_n.
class GradedBasis {
public:
    GradedBasis(int n, VarSet vars);

    int degree() const { return n_; }
    VarSet vars() const { return vars_; }
    std::size_t size() const { return elems_.size(); }
    const BasisElement& operator[](std::size_t j) const { return elems_[j]; }
    const std::vector<BasisElement>& elements() const { return elems_; }

    // Position of (slot, mono), or -1 when absent.
    long index_of(int slot, const Monomial& m) const;
    std::vector<GaussRational> coordinates(const SpinorPoly& f) const;
    SpinorPoly reconstruct(const std::vector<GaussRational>& v) const;
    SpinorPoly element(std::size_t j) const;

private:
    int n_;
    VarSet vars_;
    std::vector<BasisElement> elems_;
    std::map<Monomial, std::size_t> slot_index_;  // index within the up block
};

GradedBasis enumerate_basis(int n, VarSet vars);

}  // namespace bim
