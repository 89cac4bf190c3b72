#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "nfct/errors.hpp"
#include "nfct/rational.hpp"

namespace nfct {

/// Dense matrix over Rational, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        e_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatch("ragged initializer for RatMatrix");
            for (const auto& x : r) e_.push_back(x);
        }
    }

    static RatMatrix identity(size_t n) {
        RatMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Rational> row(size_t i) const {
        return {e_.begin() + static_cast<long>(i * cols_), e_.begin() + static_cast<long>((i + 1) * cols_)};
    }

    void set_row(size_t i, const std::vector<Rational>& v) {
        if (v.size() != cols_) throw DimensionMismatch("row length mismatch");
        for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
        RatMatrix c(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    if (b(k, j).is_zero()) continue;
                    c(i, j) += aik * b(k, j);
                }
            }
        return c;
    }

    friend std::vector<Rational> operator*(const RatMatrix& a, const std::vector<Rational>& v) {
        if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
        std::vector<Rational> r(a.rows_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t j = 0; j < a.cols_; ++j)
                if (!a(i, j).is_zero() && !v[j].is_zero()) r[i] += a(i, j) * v[j];
        return r;
    }

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
        RatMatrix c = a;
        for (size_t i = 0; i < c.e_.size(); ++i) c.e_[i] += b.e_[i];
        return c;
    }

    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
        RatMatrix c = a;
        for (size_t i = 0; i < c.e_.size(); ++i) c.e_[i] -= b.e_[i];
        return c;
    }

    friend RatMatrix operator*(const Rational& s, RatMatrix m) {
        for (auto& x : m.e_) x *= s;
        return m;
    }

    friend RatMatrix operator-(RatMatrix m) {
        for (auto& x : m.e_) x = -x;
        return m;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    /// Total order (shape, then entries); used to deduplicate group elements.
    friend bool operator<(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        for (size_t i = 0; i < a.e_.size(); ++i) {
            if (a.e_[i] < b.e_[i]) return true;
            if (b.e_[i] < a.e_[i]) return false;
        }
        return false;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

struct RrefResult {
    RatMatrix matrix;
    std::vector<size_t> pivot_cols;
    size_t rank = 0;
};

/// Canonical reduced row echelon form. Pivot rule: first nonzero entry in
/// column order; exact arithmetic needs no magnitude pivoting.
inline RrefResult rref(RatMatrix m) {
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(p, j));
        const Rational inv = m(r, c).reciprocal();
        for (size_t j = c; j < cols; ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rational f = m(i, c);
            for (size_t j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j).submul(f, m(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots), r};
}

/// Inverse via Gauss-Jordan on [m | I]; throws SingularMatrix.
inline RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    const size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult rr = rref(std::move(aug));
    // singular iff some pivot escapes into the identity block
    for (size_t i = 0; i < n; ++i)
        if (i >= rr.rank || rr.pivot_cols[i] != i) throw SingularMatrix("matrix is singular");
    RatMatrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = rr.matrix(i, n + j);
    return inv;
}

/// Solve m x = rhs, picking the unique solution whose non-pivot (free)
/// coordinates are all zero. Throws InternalCheckFailure on an inconsistent
/// system; callers use this only where solvability is guaranteed.
inline std::vector<Rational> solve_pivot(const RatMatrix& m, const std::vector<Rational>& rhs) {
    if (m.rows() != rhs.size()) throw DimensionMismatch("solve_pivot shape mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    RrefResult rr = rref(std::move(aug));
    std::vector<Rational> x(m.cols());
    for (size_t i = 0; i < rr.rank; ++i) {
        const size_t pc = rr.pivot_cols[i];
        if (pc == m.cols()) throw InternalCheckFailure("solve_pivot: inconsistent system");
        x[pc] = rr.matrix(i, m.cols());
    }
    return x;
}

} // namespace nfct
