// SPDX-License-Identifier: Apache-2.0
#include "bim/exact.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bim {

namespace {

bool valid_int(std::string_view s, bool allow_sign) {
    std::size_t p = 0;
    if (allow_sign && p < s.size() && (s[p] == '+' || s[p] == '-')) ++p;
    if (p == s.size()) return false;
    for (; p < s.size(); ++p)
        if (!std::isdigit(static_cast<unsigned char>(s[p]))) return false;
    return true;
}

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

}  // namespace

Rational parse_rational(std::string_view in) {
    std::string s = trim(in);
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw std::invalid_argument("malformed rational: '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

GaussRational GaussRational::inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
    return {re_ / n, -im_ / n};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    if (o.is_real()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) { return *this *= o.inverse(); }

// Accepts "a", "a/b", "i", "-i", "c/d*i", "a/b+c/d*i", "a-i".
GaussRational parse_gauss(std::string_view in) {
    std::string s;
    for (char ch : in)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty Gaussian rational");

    auto parse_imag = [&](std::string t) -> Rational {
        // t ends with 'i'; strip "*i" or "i".
        t.pop_back();
        if (!t.empty() && t.back() == '*') t.pop_back();
        if (t.empty() || t == "+") return Rational(1);
        if (t == "-") return Rational(-1);
        return parse_rational(t);
    };

    if (s.back() != 'i') return GaussRational(parse_rational(s));
    // Split at the last sign that is not leading and not inside an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t p = s.size(); p-- > 1;)
        if (s[p] == '+' || s[p] == '-') {
            split = p;
            break;
        }
    if (split == std::string::npos) return {Rational(0), parse_imag(s)};
    return {parse_rational(s.substr(0, split)), parse_imag(s.substr(split))};
}

std::string to_string(const GaussRational& z) {
    if (z.is_real()) return to_string(z.re());
    std::string im;
    if (z.im() == 1)
        im = "i";
    else if (z.im() == -1)
        im = "-i";
    else
        im = to_string(z.im()) + "*i";
    if (sgn(z.re()) == 0) return im;
    if (im[0] != '-') im = "+" + im;
    return to_string(z.re()) + im;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << to_string(z); }

GaussRational half_power_of_minus_one(long h) {
    switch (((h % 4) + 4) % 4) {
        case 0: return 1;
        case 1: return GaussRational::i();
        case 2: return -1;
        default: return -GaussRational::i();
    }
}

Mat2 Mat2::sigma(int a) {
    const GaussRational i = GaussRational::i();
    switch (a) {
        case 0: return identity();
        case 1: return {0, 1, 1, 0};
        case 2: return {0, -i, i, 0};
        case 3: return {1, 0, 0, -1};
    }
    throw std::out_of_range("sigma index must be 0..3");
}

bool Mat2::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

GaussRational Mat2::det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

Mat2 Mat2::inverse() const {
    GaussRational d = det();
    if (d.is_zero()) throw std::domain_error("singular 2x2 matrix");
    GaussRational r = d.inverse();
    return {e_[3] * r, -e_[1] * r, -e_[2] * r, e_[0] * r};
}

Mat2 Mat2::pow(unsigned k) const {
    Mat2 r = identity(), b = *this;
    while (k) {
        if (k & 1u) r = r * b;
        b = b * b;
        k >>= 1u;
    }
    return r;
}

Mat2 Mat2::operator-() const { return {-e_[0], -e_[1], -e_[2], -e_[3]}; }

Mat2& Mat2::operator+=(const Mat2& o) {
    for (int j = 0; j < 4; ++j) e_[j] += o.e_[j];
    return *this;
}

Mat2& Mat2::operator-=(const Mat2& o) {
    for (int j = 0; j < 4; ++j) e_[j] -= o.e_[j];
    return *this;
}

Mat2& Mat2::operator*=(const GaussRational& s) {
    for (auto& x : e_) x *= s;
    return *this;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

Mat2 mat2_anticommutator(const Mat2& a, const Mat2& b) { return a * b + b * a; }

std::string to_string(const Mat2& m) {
    std::ostringstream os;
    os << "[[" << m(0, 0) << ", " << m(0, 1) << "], [" << m(1, 0) << ", " << m(1, 1) << "]]";
    return os.str();
}

}  // namespace bim
