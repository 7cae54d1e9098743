// SPDX-License-Identifier: Apache-2.0
#include "bim/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace bim {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m(j, j) = 1;
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const { return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_); }

Vec Matrix::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_scalar(GaussRational* value) const {
    if (rows_ != cols_) return false;
    GaussRational s = rows_ ? (*this)(0, 0) : GaussRational();
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? s : GaussRational())) return false;
    if (value) *value = s;
    return true;
}

GaussRational Matrix::trace() const {
    GaussRational t;
    for (std::size_t j = 0; j < std::min(rows_, cols_); ++j) t += (*this)(j, j);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
    for (std::size_t j = 0; j < a_.size(); ++j) a_[j] += o.a_[j];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
    for (std::size_t j = 0; j < a_.size(); ++j) a_[j] -= o.a_[j];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in *");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussRational& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
        }
    return m;
}

Matrix operator*(const GaussRational& s, Matrix a) {
    for (auto& x : a.a_) x *= s;
    return a;
}

Vec operator*(const Matrix& a, const Vec& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("shape mismatch in matrix-vector product");
    Vec w(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c)
            if (!v[c].is_zero() && !a(r, c).is_zero()) w[r] += a(r, c) * v[c];
    return w;
}

Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }
Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

namespace {

// Gaussian integer for the fraction-free pass.
struct GInt {
    Integer re{0}, im{0};
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

// a*b - c*d
GInt mul_sub(const GInt& a, const GInt& b, const GInt& c, const GInt& d) {
    GInt r;
    r.re = a.re * b.re - a.im * b.im - (c.re * d.re - c.im * d.im);
    r.im = a.re * b.im + a.im * b.re - (c.re * d.im + c.im * d.re);
    return r;
}

// Exact quotient x / p in Z[i]; Bareiss guarantees divisibility.
GInt divexact(const GInt& x, const GInt& p) {
    Integer nrm = p.re * p.re + p.im * p.im;
    Integer re = x.re * p.re + x.im * p.im;
    Integer im = x.im * p.re - x.re * p.im;
    GInt q;
    if (!mpz_divisible_p(re.get_mpz_t(), nrm.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), nrm.get_mpz_t()))
        throw std::logic_error("Bareiss step produced an inexact quotient");
    mpz_divexact(q.re.get_mpz_t(), re.get_mpz_t(), nrm.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), im.get_mpz_t(), nrm.get_mpz_t());
    return q;
}

std::vector<GInt> integral_row(const Matrix& m, std::size_t r) {
    Integer l(1);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const auto& z = m(r, c);
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.re().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.im().get_den_mpz_t());
    }
    std::vector<GInt> row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const auto& z = m(r, c);
        row[c].re = z.re().get_num() * (l / z.re().get_den());
        row[c].im = z.im().get_num() * (l / z.im().get_den());
    }
    return row;
}

}  // namespace

Echelon row_reduce(const Matrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<GInt>> a(R);
    for (std::size_t r = 0; r < R; ++r) a[r] = integral_row(m, r);

    std::vector<std::size_t> pivots;
    GInt prev;
    prev.re = 1;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < C && pr < R; ++c) {
        std::size_t sel = pr;
        while (sel < R && a[sel][c].is_zero()) ++sel;
        if (sel == R) continue;
        std::swap(a[pr], a[sel]);
        const GInt p = a[pr][c];
        for (std::size_t r = pr + 1; r < R; ++r) {
            const GInt f = a[r][c];
            for (std::size_t j = c + 1; j < C; ++j) {
                if (f.is_zero() && a[r][j].is_zero()) continue;
                a[r][j] = divexact(mul_sub(p, a[r][j], f, a[pr][j]), prev);
            }
            a[r][c] = GInt{};
        }
        prev = p;
        pivots.push_back(c);
        ++pr;
    }

    // Normalize to reduced form over Q(i).
    const std::size_t rk = pivots.size();
    Matrix red(rk, C);
    for (std::size_t r = 0; r < rk; ++r) {
        GaussRational inv = GaussRational(Rational(a[r][pivots[r]].re), Rational(a[r][pivots[r]].im)).inverse();
        for (std::size_t c = pivots[r]; c < C; ++c)
            if (!a[r][c].is_zero()) red(r, c) = GaussRational(Rational(a[r][c].re), Rational(a[r][c].im)) * inv;
    }
    for (std::size_t r = rk; r-- > 0;) {
        const std::size_t pc = pivots[r];
        for (std::size_t u = 0; u < r; ++u) {
            GaussRational f = red(u, pc);
            if (f.is_zero()) continue;
            for (std::size_t c = pc; c < C; ++c)
                if (!red(r, c).is_zero()) red(u, c) -= f * red(r, c);
        }
    }
    return {std::move(pivots), std::move(red)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vec> nullspace(const Matrix& m) {
    const std::size_t C = m.cols();
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(C, false);
    for (auto p : e.pivots) is_pivot[p] = true;

    std::vector<Vec> raw;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        Vec v(C);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, f);
        raw.push_back(std::move(v));
    }
    if (raw.size() + e.pivots.size() != C) throw std::logic_error("rank-nullity violated");
    return Subspace::span(C, raw).basis();
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    Echelon e = row_reduce(Matrix::from_rows(ambient, vectors));
    s.pivots_ = e.pivots;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) s.rows_.push_back(e.rref.row(r));
    return s;
}

Subspace Subspace::whole(std::size_t ambient) {
    std::vector<Vec> id;
    for (std::size_t j = 0; j < ambient; ++j) {
        Vec v(ambient);
        v[j] = 1;
        id.push_back(std::move(v));
    }
    return span(ambient, id);
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    Vec coef(rows_.size());
    Vec rest = v;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        coef[j] = rest[pivots_[j]];
        if (coef[j].is_zero()) continue;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!rows_[j][c].is_zero()) rest[c] -= coef[j] * rows_[j][c];
    }
    if (!is_zero(rest)) return std::nullopt;
    return coef;
}

bool Subspace::contains(const Subspace& s) const {
    for (const auto& v : s.basis())
        if (!contains(v)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    std::vector<Vec> all = rows_;
    all.insert(all.end(), o.rows_.begin(), o.rows_.end());
    return span(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (dim() == 0 || o.dim() == 0) return Subspace(ambient_);
    std::vector<Vec> cols = rows_;
    for (const auto& v : o.rows_) {
        Vec w = v;
        for (auto& x : w) x = -x;
        cols.push_back(std::move(w));
    }
    std::vector<Vec> combos = nullspace(Matrix::from_columns(ambient_, cols));
    std::vector<Vec> vecs;
    for (const auto& cmb : combos) {
        Vec w(ambient_);
        for (std::size_t j = 0; j < rows_.size(); ++j)
            if (!cmb[j].is_zero())
                for (std::size_t c = 0; c < ambient_; ++c) w[c] += cmb[j] * rows_[j][c];
        vecs.push_back(std::move(w));
    }
    return span(ambient_, vecs);
}

Matrix matrix_of_operator(const SpinorMap& op, const GradedBasis& domain, const GradedBasis& codomain) {
    Matrix m(codomain.size(), domain.size());
    for (std::size_t j = 0; j < domain.size(); ++j) {
        SpinorPoly img = op(domain.element(j));
        Vec v = codomain.coordinates(img);
        for (std::size_t r = 0; r < v.size(); ++r) m(r, j) = v[r];
    }
    return m;
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << to_string(m(r, c));
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace bim
