// Dense exact linear algebra over an arbitrary field: reduced row echelon
// form, rank, nullspace, linear solve, and subspace arithmetic.  Pivoting is
// deterministic (first nonzero in column order), so every basis this file
// produces is reproducible across runs and platforms.

#ifndef SQFM_MATRIX_HPP
#define SQFM_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqfm/fields.hpp"

namespace sqfm {

template <FieldScalar F>
using Vec = std::vector<F>;

template <FieldScalar F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_)
            throw std::invalid_argument("Matrix: entry count does not match shape");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F{1};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const F& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Vec<F> row(std::size_t i) const {
        return Vec<F>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    Vec<F> col(std::size_t j) const {
        Vec<F> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Matrix: incompatible shapes in product");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend Vec<F> operator*(const Matrix& a, const Vec<F>& x) {
        if (a.cols_ != x.size())
            throw std::invalid_argument("Matrix: incompatible shapes in matrix-vector product");
        Vec<F> y(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (!a(i, j).is_zero()) y[i] += a(i, j) * x[j];
        return y;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: incompatible shapes in sum");
        Matrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: incompatible shapes in difference");
        Matrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
        return c;
    }
    friend Matrix operator*(const F& s, Matrix a) {
        for (F& x : a.a_) x = s * x;
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<F> a_;

    Matrix& operator+=(const Matrix&) = delete;
};

/** Stacks b below a (column counts must agree or one side is empty). */
template <FieldScalar F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols())
        throw std::invalid_argument("vstack: column counts differ");
    Matrix<F> c(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
    return c;
}

template <FieldScalar F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() == 0 && a.rows() == 0) return b;
    if (b.cols() == 0 && b.rows() == 0) return a;
    if (a.rows() != b.rows())
        throw std::invalid_argument("hstack: row counts differ");
    Matrix<F> c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

template <FieldScalar F>
Matrix<F> matrix_from_rows(const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix<F> m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("matrix_from_rows: ragged input");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

template <FieldScalar F>
Matrix<F> matrix_from_cols(const std::vector<Vec<F>>& cols, std::size_t rows) {
    Matrix<F> m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw std::invalid_argument("matrix_from_cols: ragged input");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

template <FieldScalar F>
struct Echelon {
    Matrix<F> mat;                        // reduced row echelon form
    std::vector<std::size_t> pivot_cols;  // ascending
    std::size_t rank() const { return pivot_cols.size(); }
};

/** Gauss-Jordan with deterministic pivoting: first nonzero row per column. */
template <FieldScalar F>
Echelon<F> reduced_row_echelon(Matrix<F> m) {
    Echelon<F> e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
        F inv = F{1} / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = inv * m(r, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.mat = std::move(m);
    return e;
}

template <FieldScalar F>
std::size_t rank(const Matrix<F>& m) {
    return reduced_row_echelon(m).rank();
}

/**
 * Canonical basis of {x : Mx = 0}: one vector per free column, with 1 in the
 * free position and the RREF back-substitution elsewhere.
 */
template <FieldScalar F>
std::vector<Vec<F>> nullspace(const Matrix<F>& m) {
    Echelon<F> e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Vec<F>> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec<F> v(m.cols());
        v[c] = F{1};
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
            v[e.pivot_cols[i]] = -e.mat(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

/** One exact solution of Mx = b, or nullopt if the system is inconsistent. */
template <FieldScalar F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side has wrong length");
    Matrix<F> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Echelon<F> e = reduced_row_echelon(std::move(aug));
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols())
        return std::nullopt;  // pivot in the augmented column
    Vec<F> x(m.cols());
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
        x[e.pivot_cols[i]] = e.mat(i, m.cols());
    return x;
}

/**
 * Canonical basis of the span of the given vectors: the nonzero rows of the
 * RREF.  Two spans are equal iff their canonical bases are equal.
 */
template <FieldScalar F>
std::vector<Vec<F>> span_basis(const std::vector<Vec<F>>& vectors, std::size_t dim) {
    Echelon<F> e = reduced_row_echelon(matrix_from_rows(vectors, dim));
    std::vector<Vec<F>> basis;
    for (std::size_t i = 0; i < e.rank(); ++i) basis.push_back(e.mat.row(i));
    return basis;
}

/** Basis of span(a) ∩ span(b), canonicalized. */
template <FieldScalar F>
std::vector<Vec<F>> span_intersection(const std::vector<Vec<F>>& a,
                                      const std::vector<Vec<F>>& b, std::size_t dim) {
    if (a.empty() || b.empty()) return {};
    // x = sum c_i a_i = sum d_j b_j  <=>  (c,d) in nullspace of [A^T | -B^T]
    Matrix<F> m(dim, a.size() + b.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = a[j][i];
    for (std::size_t j = 0; j < b.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m(i, a.size() + j) = -b[j][i];
    std::vector<Vec<F>> sols;
    for (const Vec<F>& cd : nullspace(m)) {
        Vec<F> x(dim);
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t i = 0; i < dim; ++i) x[i] += cd[j] * a[j][i];
        sols.push_back(std::move(x));
    }
    return span_basis(sols, dim);
}

/** Coordinates of v in the given (independent) basis, or nullopt. */
template <FieldScalar F>
std::optional<Vec<F>> coordinates_in(const std::vector<Vec<F>>& basis, const Vec<F>& v) {
    if (basis.empty()) {
        for (const F& x : v)
            if (!x.is_zero()) return std::nullopt;
        return Vec<F>{};
    }
    return solve(matrix_from_cols(basis, v.size()), v);
}

}  // namespace sqfm

#endif  // SQFM_MATRIX_HPP
