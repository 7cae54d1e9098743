// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <array>
#include <ostream>
#include <string>
#include <string_view>

namespace bim {

// GMP keeps mpq_class canonical after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class(p, q) does not reduce; use this for computed fractions.
inline Rational frac(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view s);
std::string to_string(const Rational& q);

// Element of Q(i).
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long v) : re_(v) {}
    GaussRational(const Rational& re) : re_(re) {}
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    GaussRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussRational inverse() const;

    GaussRational operator-() const { return {-re_, -im_}; }
    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

private:
    Rational re_{0};
    Rational im_{0};
};

GaussRational parse_gauss(std::string_view s);
std::string to_string(const GaussRational& z);
std::ostream& operator<<(std::ostream& os, const GaussRational& z);

// i^h, the fixed branch used for every (-1)^{h/2}.
GaussRational half_power_of_minus_one(long h);

// (-1)^n for integer n.
inline int sign_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

// 2x2 matrix over Q(i), row-major.
class Mat2 {
public:
    Mat2() = default;
    Mat2(GaussRational a, GaussRational b, GaussRational c, GaussRational d)
        : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 zero() { return {}; }
    static Mat2 scalar(const GaussRational& s) { return {s, 0, 0, s}; }
    // sigma(0) is the identity, sigma(1..3) the Pauli matrices.
    static Mat2 sigma(int a);

    const GaussRational& operator()(int r, int c) const { return e_[2 * r + c]; }
    GaussRational& operator()(int r, int c) { return e_[2 * r + c]; }

    bool is_zero() const;
    GaussRational det() const;
    Mat2 pow(unsigned k) const;
    // Throws on a singular matrix.
    Mat2 inverse() const;

    Mat2 operator-() const;
    Mat2& operator+=(const Mat2& o);
    Mat2& operator-=(const Mat2& o);
    Mat2& operator*=(const GaussRational& s);

    friend Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
    friend Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
    friend Mat2 operator*(Mat2 a, const GaussRational& s) { return a *= s; }
    friend Mat2 operator*(const GaussRational& s, Mat2 a) { return a *= s; }
    friend Mat2 operator*(const Mat2& a, const Mat2& b);
    friend bool operator==(const Mat2& a, const Mat2& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Mat2& a, const Mat2& b) { return !(a == b); }

private:
    std::array<GaussRational, 4> e_{};
};

Mat2 mat2_anticommutator(const Mat2& a, const Mat2& b);
std::string to_string(const Mat2& m);

}  // namespace bim
