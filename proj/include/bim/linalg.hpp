// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bim/poly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bim {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);
    static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    GaussRational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const GaussRational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;
    bool is_zero() const;
    bool is_scalar(GaussRational* value = nullptr) const;
    GaussRational trace() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const GaussRational& s, Matrix a);
    friend Vec operator*(const Matrix& a, const Vec& v);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<GaussRational> a_;
};

Matrix anticommutator(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);

// Row echelon data from fraction-free elimination.
struct Echelon {
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
    Matrix rref;                      // reduced rows, pivot entries 1
};

// Fraction-free (Bareiss) forward elimination over Z[i] after row scaling,
// then normalization to reduced row echelon form over Q(i).
Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
// Reduced echelon basis of the kernel.
std::vector<Vec> nullspace(const Matrix& m);

bool is_zero(const Vec& v);

// Subspace of Q(i)^N kept as reduced row echelon rows.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace whole(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Coefficients in the echelon basis, or nullopt when v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;
    bool contains(const Vec& v) const { return coordinates(v).has_value(); }
    bool contains(const Subspace& s) const;
    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

using SpinorMap = std::function<SpinorPoly(const SpinorPoly&)>;

// Column j holds the codomain coordinates of op(domain_j).
Matrix matrix_of_operator(const SpinorMap& op, const GradedBasis& domain, const GradedBasis& codomain);

std::string to_string(const Matrix& m);

}  // namespace bim
