#pragma once

#include <optional>
#include <utility>

#include "nfct/errors.hpp"
#include "nfct/matrix.hpp"
#include "nfct/polyvec.hpp"
#include "nfct/subspace.hpp"
#include "nfct/symmetry.hpp"

namespace nfct {

/// The homological operator Ad_L^k(p) = (dp) Lx - L p as an exact matrix on
/// the canonical slice basis: column j holds the coordinates of the image of
/// basis term j.
struct HomologicalMatrix {
    RatMatrix L;
    int degree;
    SliceBasis basis;
    RatMatrix matrix;
};

inline HomologicalMatrix ad_matrix(const RatMatrix& L, int k) {
    if (!L.is_square()) throw DimensionMismatch("linear part must be square");
    if (k < 1) throw DegreeError("ad_matrix needs degree >= 1");
    const size_t n = L.rows();
    SliceBasis basis = slice_basis(n, k);
    const TruncatedVF linear_field = TruncatedVF::from_linear(L, 1);
    RatMatrix m(basis.size(), basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        HomogeneousVF unit(n, k);
        unit.add_term(basis.term(j), 1);
        const std::vector<Rational> col = to_coords(ad_apply(linear_field, unit, k), basis);
        for (size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
    }
    return {L, k, std::move(basis), std::move(m)};
}

/// Column space of the operator: Ad_L^k(P_V^k).
inline Subspace image_subspace(const HomologicalMatrix& hm) {
    return Subspace::span_of_rows(hm.matrix.transpose());
}

/// Degree-k normal-form space without symmetry: ker Ad_{L^t}^k. This is the
/// space of fields equivariant under the one-parameter group generated by
/// L^t, which is never materialized; the kernel characterization stands in
/// for it.
inline Subspace nf_space_nonsym(const RatMatrix& L, int k) {
    if (k < 2) throw DegreeError("normal-form spaces start at degree 2");
    return kernel_basis(ad_matrix(L.transpose(), k).matrix);
}

/// Degree-k reversible-equivariant normal-form space:
/// ker Ad_{L^t}^k intersected with Q_V^k(Gamma).
inline Subspace nf_space_reveq(const RatMatrix& L, const SignedGroup& g, int k) {
    if (!is_rev_equivariant_linear(L, g))
        throw LinearPartNotReversible("linear part is not reversible-equivariant for the given group");
    return subspace_intersect(nf_space_nonsym(L, k), fixed_slice(g, k, SliceMode::Reversible));
}

/// Outcome of checking one of the two direct-sum decompositions. Failure is
/// reported rather than thrown: the decomposition is a theorem under the
/// stated hypotheses, so a false flag points at a bug or bad problem data.
struct DecompositionReport {
    int degree = 0;
    size_t target_dim = 0;      // dim of the slice being decomposed
    size_t transversal_dim = 0; // dim of the normal-form space
    size_t image_dim = 0;       // dim of the homological image
    size_t sum_dim = 0;
    bool is_direct = false;
    bool spans_all = false;

    bool ok() const { return is_direct && spans_all; }
};

/// Check P_V^k = ker Ad_{L^t}^k (+) Ad_L^k(P_V^k).
inline DecompositionReport verify_decomposition(const RatMatrix& L, int k) {
    if (k < 2) throw DegreeError("decomposition checks start at degree 2");
    const Subspace ker = nf_space_nonsym(L, k);
    const Subspace im = image_subspace(ad_matrix(L, k));
    const SumResult s = subspace_sum(ker, im);
    DecompositionReport r;
    r.degree = k;
    r.target_dim = ker.ambient_dim();
    r.transversal_dim = ker.dim();
    r.image_dim = im.dim();
    r.sum_dim = s.sum.dim();
    r.is_direct = s.is_direct;
    r.spans_all = s.sum == Subspace::full(ker.ambient_dim());
    return r;
}

/// Check Q_V^k(Gamma) = nf_space_reveq (+) Ad_L^k(P_V^k(Gamma)).
inline DecompositionReport verify_decomposition(const RatMatrix& L, int k, const SignedGroup& g) {
    if (k < 2) throw DegreeError("decomposition checks start at degree 2");
    const Subspace w = nf_space_reveq(L, g, k); // also validates L against g
    const Subspace target = fixed_slice(g, k, SliceMode::Reversible);
    const Subspace equiv = fixed_slice(g, k, SliceMode::Equivariant);
    const SliceBasis basis = slice_basis(g.n(), k);
    const TruncatedVF linear_field = TruncatedVF::from_linear(L, 1);
    RatMatrix rows(equiv.dim(), basis.size());
    for (size_t i = 0; i < equiv.dim(); ++i) {
        const HomogeneousVF xi = from_coords(equiv.basis().row(i), basis);
        rows.set_row(i, to_coords(ad_apply(linear_field, xi, k), basis));
    }
    const Subspace im = Subspace::span_of_rows(rows);
    const SumResult s = subspace_sum(w, im);
    DecompositionReport r;
    r.degree = k;
    r.target_dim = target.dim();
    r.transversal_dim = w.dim();
    r.image_dim = im.dim();
    r.sum_dim = s.sum.dim();
    r.is_direct = s.is_direct;
    r.spans_all = s.sum == target;
    return r;
}

inline DecompositionReport verify_decomposition(const RatMatrix& L, int k,
                                                const std::optional<SignedGroup>& g) {
    return g ? verify_decomposition(L, k, *g) : verify_decomposition(L, k);
}

} // namespace nfct
