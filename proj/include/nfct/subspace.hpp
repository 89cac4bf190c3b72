#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nfct/errors.hpp"
#include "nfct/matrix.hpp"
#include "nfct/rational.hpp"

namespace nfct {

/// Linear subspace of Q^ambient, stored as the reduced row echelon basis of
/// its spanning set. RREF is canonical, so set equality is entrywise equality.
class Subspace {
public:
    Subspace() : Subspace(0, RatMatrix(0, 0), {}) {}

    static Subspace zero(size_t ambient) { return Subspace(ambient, RatMatrix(0, ambient), {}); }

    static Subspace full(size_t ambient) {
        return Subspace(ambient, RatMatrix::identity(ambient), iota_pivots(ambient));
    }

    /// Span of the rows of `rows`; zero rows are dropped.
    static Subspace span_of_rows(const RatMatrix& rows) {
        RrefResult rr = rref(rows);
        RatMatrix basis(rr.rank, rows.cols());
        for (size_t i = 0; i < rr.rank; ++i) basis.set_row(i, rr.matrix.row(i));
        return Subspace(rows.cols(), std::move(basis), std::move(rr.pivot_cols));
    }

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; }
    const std::vector<size_t>& pivot_cols() const { return pivots_; }

    /// Coordinates of v in the RREF basis, or nullopt when v is outside.
    /// For an RREF basis the candidate coordinates can be read off the pivot
    /// columns; one reconstruction pass certifies membership.
    std::optional<std::vector<Rational>> coords_of(const std::vector<Rational>& v) const {
        if (v.size() != ambient_) throw AmbientMismatch("vector length != ambient dimension");
        std::vector<Rational> c(dim());
        for (size_t j = 0; j < dim(); ++j) c[j] = v[pivots_[j]];
        std::vector<Rational> rec(ambient_);
        for (size_t j = 0; j < dim(); ++j) {
            if (c[j].is_zero()) continue;
            for (size_t k = 0; k < ambient_; ++k)
                if (!basis_(j, k).is_zero()) rec[k] += c[j] * basis_(j, k);
        }
        if (rec != v) return std::nullopt;
        return c;
    }

    bool contains(const std::vector<Rational>& v) const { return coords_of(v).has_value(); }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw AmbientMismatch("subspace ambient dimensions differ");
        for (size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    /// Lift coordinates back to an ambient vector.
    std::vector<Rational> lift(const std::vector<Rational>& coords) const {
        if (coords.size() != dim()) throw DimensionMismatch("coordinate length != subspace dimension");
        std::vector<Rational> v(ambient_);
        for (size_t j = 0; j < dim(); ++j) {
            if (coords[j].is_zero()) continue;
            for (size_t k = 0; k < ambient_; ++k)
                if (!basis_(j, k).is_zero()) v[k] += coords[j] * basis_(j, k);
        }
        return v;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Subspace(size_t ambient, RatMatrix basis, std::vector<size_t> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    static std::vector<size_t> iota_pivots(size_t n) {
        std::vector<size_t> p(n);
        for (size_t i = 0; i < n; ++i) p[i] = i;
        return p;
    }

    size_t ambient_ = 0;
    RatMatrix basis_;
    std::vector<size_t> pivots_;
};

/// Null space of m as a canonical Subspace of dimension cols - rank.
inline Subspace kernel_basis(const RatMatrix& m) {
    RrefResult rr = rref(m);
    const size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : rr.pivot_cols) is_pivot[p] = true;
    RatMatrix vectors(cols - rr.rank, cols);
    size_t row = 0;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        vectors(row, f) = 1;
        for (size_t i = 0; i < rr.rank; ++i) vectors(row, rr.pivot_cols[i]) = -rr.matrix(i, f);
        ++row;
    }
    return Subspace::span_of_rows(vectors);
}

inline bool in_span(const std::vector<Rational>& v, const Subspace& s) { return s.contains(v); }

struct SumResult {
    Subspace sum;
    bool is_direct;
};

inline SumResult subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("subspace_sum: ambient dimensions differ");
    RatMatrix stacked(a.dim() + b.dim(), a.ambient_dim());
    for (size_t i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis().row(i));
    for (size_t i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis().row(i));
    Subspace s = Subspace::span_of_rows(stacked);
    const bool direct = s.dim() == a.dim() + b.dim();
    return {std::move(s), direct};
}

/// Zassenhaus: row reduce [A|A; B|0]. Reduced rows with a zero left block
/// carry intersection vectors in their right block.
inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("subspace_intersect: ambient dimensions differ");
    const size_t n = a.ambient_dim();
    RatMatrix block(a.dim() + b.dim(), 2 * n);
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < n; ++j) {
            block(i, j) = a.basis()(i, j);
            block(i, n + j) = a.basis()(i, j);
        }
    for (size_t i = 0; i < b.dim(); ++i)
        for (size_t j = 0; j < n; ++j) block(a.dim() + i, j) = b.basis()(i, j);
    RrefResult rr = rref(std::move(block));
    std::vector<std::vector<Rational>> inter;
    for (size_t i = 0; i < rr.rank; ++i) {
        bool left_zero = true;
        for (size_t j = 0; j < n && left_zero; ++j) left_zero = rr.matrix(i, j).is_zero();
        if (!left_zero) continue;
        std::vector<Rational> right(n);
        for (size_t j = 0; j < n; ++j) right[j] = rr.matrix(i, n + j);
        inter.push_back(std::move(right));
    }
    RatMatrix rows(inter.size(), n);
    for (size_t i = 0; i < inter.size(); ++i) rows.set_row(i, inter[i]);
    return Subspace::span_of_rows(rows);
}

} // namespace nfct
