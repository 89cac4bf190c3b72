#pragma once

#include <utility>
#include <vector>

#include "nfct/errors.hpp"
#include "nfct/homological.hpp"
#include "nfct/polyvec.hpp"
#include "nfct/subspace.hpp"
#include "nfct/symmetry.hpp"

namespace nfct {

/// Outcome of splitting v = w + Ad_L^k(xi) with w in the normal-form space.
struct SplitResult {
    HomogeneousVF w;
    HomogeneousVF xi;
};

namespace detail {

/// Solve c = a . rows(W) + M xi in the given coordinates. The projection onto
/// W along the image is unique (direct sum); xi is made canonical by zeroing
/// the free variables of the echelonized system (pivot-determined choice).
inline std::pair<std::vector<Rational>, std::vector<Rational>>
split_in_coords(const Subspace& w, const RatMatrix& op, const std::vector<Rational>& c) {
    const size_t dim = c.size();
    const Subspace image = Subspace::span_of_rows(op.transpose());
    if (w.dim() + image.dim() != dim)
        throw InternalCheckFailure("normal-form space and homological image do not decompose the slice");
    // columns: W basis vectors, then image basis vectors
    RatMatrix cols(dim, dim);
    for (size_t j = 0; j < w.dim(); ++j)
        for (size_t i = 0; i < dim; ++i) cols(i, j) = w.basis()(j, i);
    for (size_t j = 0; j < image.dim(); ++j)
        for (size_t i = 0; i < dim; ++i) cols(i, w.dim() + j) = image.basis()(j, i);
    const std::vector<Rational> split = solve_pivot(cols, c);

    std::vector<Rational> w_part(dim);
    for (size_t j = 0; j < w.dim(); ++j) {
        if (split[j].is_zero()) continue;
        for (size_t i = 0; i < dim; ++i)
            if (!w.basis()(j, i).is_zero()) w_part[i] += split[j] * w.basis()(j, i);
    }
    std::vector<Rational> rest(dim);
    for (size_t i = 0; i < dim; ++i) rest[i] = c[i] - w_part[i];
    const std::vector<Rational> xi = solve_pivot(op, rest);
    return {std::move(w_part), std::move(xi)};
}

} // namespace detail

/// v = w + Ad_L^k(xi), w in ker Ad_{L^t}^k, xi pivot-determined (its free
/// coordinates along ker Ad_L^k are zero).
inline SplitResult split(const HomogeneousVF& v, const RatMatrix& L) {
    const int k = v.degree();
    if (k < 2) throw DegreeError("split needs degree >= 2");
    const HomologicalMatrix hm = ad_matrix(L, k);
    const Subspace w_space = nf_space_nonsym(L, k);
    const std::vector<Rational> c = to_coords(v, hm.basis);
    auto [w_coords, xi_coords] = detail::split_in_coords(w_space, hm.matrix, c);
    return {from_coords(w_coords, hm.basis), from_coords(xi_coords, hm.basis)};
}

/// Reversible-equivariant split, solved inside the graded symmetry slices:
/// v in Q_V^k(Gamma) becomes w + Ad_L^k(xi) with w in the reversible
/// normal-form space and xi Gamma-equivariant.
inline SplitResult split(const HomogeneousVF& v, const RatMatrix& L, const SignedGroup& g) {
    const int k = v.degree();
    if (k < 2) throw DegreeError("split needs degree >= 2");
    if (!is_rev_equivariant_linear(L, g))
        throw LinearPartNotReversible("linear part is not reversible-equivariant for the given group");
    if (!is_rev_equivariant(v, g))
        throw NotInTargetSlice("field to split is not reversible-equivariant");
    const SliceBasis basis = slice_basis(g.n(), k);
    const Subspace target = fixed_slice(g, k, SliceMode::Reversible);
    const Subspace equiv = fixed_slice(g, k, SliceMode::Equivariant);
    const Subspace w_space = nf_space_reveq(L, g, k);

    // operator Ad_L^k restricted to a basis of P^k(Gamma), in Q^k(Gamma) coordinates
    const TruncatedVF linear_field = TruncatedVF::from_linear(L, 1);
    RatMatrix op(target.dim(), equiv.dim());
    for (size_t j = 0; j < equiv.dim(); ++j) {
        const HomogeneousVF xi = from_coords(equiv.basis().row(j), basis);
        const auto image_coords = target.coords_of(to_coords(ad_apply(linear_field, xi, k), basis));
        if (!image_coords)
            throw InternalCheckFailure("homological image of an equivariant field left Q^k(Gamma)");
        for (size_t i = 0; i < target.dim(); ++i) op(i, j) = (*image_coords)[i];
    }

    RatMatrix w_rows(w_space.dim(), target.dim());
    for (size_t j = 0; j < w_space.dim(); ++j) {
        const auto coords = target.coords_of(w_space.basis().row(j));
        if (!coords) throw InternalCheckFailure("normal-form space left Q^k(Gamma)");
        w_rows.set_row(j, *coords);
    }
    const auto c = target.coords_of(to_coords(v, basis));
    if (!c) throw InternalCheckFailure("reversible-equivariant field has no Q^k(Gamma) coordinates");

    auto [w_coords, xi_coords] = detail::split_in_coords(Subspace::span_of_rows(w_rows), op, *c);
    // lift back: w from Q coordinates, xi as a combination of the equivariant basis
    const HomogeneousVF w = from_coords(target.lift(w_coords), basis);
    std::vector<Rational> xi_ambient(basis.size());
    for (size_t j = 0; j < equiv.dim(); ++j) {
        if (xi_coords[j].is_zero()) continue;
        for (size_t i = 0; i < basis.size(); ++i)
            if (!equiv.basis()(j, i).is_zero()) xi_ambient[i] += xi_coords[j] * equiv.basis()(j, i);
    }
    return {w, from_coords(xi_ambient, basis)};
}

/// Normal form of h to degree N plus the certificate trail: the changes of
/// coordinates applied (degrees 2..N in order) and per-degree membership of
/// the reduced parts in their normal-form spaces.
struct ReductionResult {
    TruncatedVF g;
    std::vector<HomogeneousVF> xis;  // xi_k for k = 2..N, zero entries included
    std::vector<bool> certificate;   // g_k in W_k for k = 2..N
};

namespace detail {

inline ReductionResult reduce_impl(const TruncatedVF& h, int N, const SignedGroup* g) {
    if (N < 2) throw DegreeError("reduction needs truncation degree >= 2");
    TruncatedVF cur = h.with_max_degree(N);
    const RatMatrix L = cur.linear_matrix();
    if (g != nullptr) {
        if (!is_rev_equivariant_linear(L, *g))
            throw LinearPartNotReversible("linear part is not reversible-equivariant for the given group");
        if (!is_rev_equivariant(cur, *g))
            throw NotInTargetSlice("input jet is not reversible-equivariant");
    }
    ReductionResult result{cur, {}, {}};
    for (int k = 2; k <= N; ++k) {
        const HomogeneousVF vk = cur.part(k);
        SplitResult s = g == nullptr ? split(vk, L) : split(vk, L, *g);
        result.xis.push_back(s.xi);
        if (!s.xi.is_zero()) cur = pushforward(cur, s.xi, N);
    }
    result.g = cur;
    for (int k = 2; k <= N; ++k) {
        const Subspace w_space = g == nullptr ? nf_space_nonsym(L, k) : nf_space_reveq(L, *g, k);
        result.certificate.push_back(in_span(to_coords(cur.part(k), slice_basis(cur.nvars(), k)), w_space));
    }
    return result;
}

} // namespace detail

/// Successive near-identity changes of coordinates, ascending degree: at each
/// k the degree-k part splits as w + Ad_L^k(xi_k) and pushing forward by
/// I + xi_k replaces it by w. The linear part never changes.
inline ReductionResult reduce(const TruncatedVF& h, int N) {
    return detail::reduce_impl(h, N, nullptr);
}

/// Reversible-equivariant reduction: every xi_k is Gamma-equivariant, so all
/// intermediate fields keep the symmetries and reversing symmetries.
inline ReductionResult reduce(const TruncatedVF& h, int N, const SignedGroup& g) {
    return detail::reduce_impl(h, N, &g);
}

} // namespace nfct
