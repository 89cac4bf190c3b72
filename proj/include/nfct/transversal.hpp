#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nfct/errors.hpp"
#include "nfct/homological.hpp"
#include "nfct/polyvec.hpp"
#include "nfct/subspace.hpp"
#include "nfct/symmetry.hpp"

namespace nfct {

/// Degree-d slice of the tangent space to the orbit of a jet h under
/// near-identity changes of coordinates: the span of the degree-d graded
/// components of Ad_h(xi) with xi ranging over a basis of the degree-2..d
/// slices (all of them, or the Gamma-equivariant ones).
///
/// The full tangent set also carries the nonlinear remainder phi(-(d xi)) h;
/// its contributions sit in strictly higher degrees at every slice checked
/// here, so the span below is what the degree-(k+1) containment sees.
struct JetOrbitSlice {
    TruncatedVF h;
    int degree;
    Subspace span;
};

namespace detail {

inline JetOrbitSlice tangent_slice_impl(const TruncatedVF& h, int d, const SignedGroup* g) {
    if (d < 2) throw DegreeError("tangent slices start at degree 2");
    const size_t n = h.nvars();
    const SliceBasis target = slice_basis(n, d);
    std::vector<std::vector<Rational>> rows;
    for (int l = 2; l <= d; ++l) {
        const SliceBasis source = slice_basis(n, l);
        if (g == nullptr) {
            for (size_t j = 0; j < source.size(); ++j) {
                HomogeneousVF xi(n, l);
                xi.add_term(source.term(j), 1);
                rows.push_back(to_coords(ad_apply(h, xi, d), target));
            }
        } else {
            const Subspace equiv = fixed_slice(*g, l, SliceMode::Equivariant);
            for (size_t j = 0; j < equiv.dim(); ++j) {
                const HomogeneousVF xi = from_coords(equiv.basis().row(j), source);
                rows.push_back(to_coords(ad_apply(h, xi, d), target));
            }
        }
    }
    RatMatrix m(rows.size(), target.size());
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return {h, d, Subspace::span_of_rows(m)};
}

} // namespace detail

inline JetOrbitSlice tangent_slice(const TruncatedVF& h, int d) {
    return detail::tangent_slice_impl(h, d, nullptr);
}

inline JetOrbitSlice tangent_slice(const TruncatedVF& h, int d, const SignedGroup& g) {
    if (h.nvars() != g.n()) throw DimensionMismatch("jet dimension != group dimension");
    return detail::tangent_slice_impl(h, d, &g);
}

/// Result of one complete-transversal computation at degree k+1 for a k-jet.
struct TransversalReport {
    int degree = 0;            // k+1
    Subspace W;                // the transversal: the degree-(k+1) normal-form space
    Subspace tangent;          // degree-(k+1) tangent slice
    bool contained = false;    // target slice inside W + tangent
    size_t target_dim = 0;
    size_t transversal_dim = 0;
    size_t tangent_dim = 0;
    size_t covered_dim = 0;    // dim of target intersected with (W + tangent)
};

namespace detail {

inline TransversalReport complete_transversal_impl(const TruncatedVF& h, const SignedGroup* g) {
    const int k = h.max_degree();
    const int d = k + 1;
    const RatMatrix L = h.linear_matrix();
    Subspace w = Subspace::zero(0);
    Subspace target = Subspace::zero(0);
    if (g == nullptr) {
        w = nf_space_nonsym(L, d);
        target = Subspace::full(slice_basis(h.nvars(), d).size());
    } else {
        if (!is_rev_equivariant_linear(L, *g))
            throw LinearPartNotReversible("linear part is not reversible-equivariant for the given group");
        for (const auto& [deg, part] : h.parts())
            if (!is_rev_equivariant(part, *g))
                throw JetNotReversible("jet part of degree " + std::to_string(deg) +
                                       " fails the reversible-equivariance test");
        w = nf_space_reveq(L, *g, d);
        target = fixed_slice(*g, d, SliceMode::Reversible);
    }
    const JetOrbitSlice tangent = g == nullptr ? tangent_slice(h, d) : tangent_slice(h, d, *g);
    const SumResult sum = subspace_sum(w, tangent.span);
    TransversalReport r;
    r.degree = d;
    r.W = w;
    r.tangent = tangent.span;
    r.target_dim = target.dim();
    r.transversal_dim = w.dim();
    r.tangent_dim = tangent.span.dim();
    r.covered_dim = subspace_intersect(target, sum.sum).dim();
    r.contained = sum.sum.contains(target);
    return r;
}

} // namespace detail

/// Transversal at degree k+1 for the k-jet h (k = h.max_degree()):
/// W = ker Ad_{L^t}^{k+1}, checked to satisfy
/// P_V^{k+1} = W + (degree-(k+1) tangent slice).
inline TransversalReport complete_transversal(const TruncatedVF& h) {
    return detail::complete_transversal_impl(h, nullptr);
}

/// Reversible-equivariant version: W = ker Ad_{L^t}^{k+1} intersected with
/// Q_V^{k+1}(Gamma), containment checked inside Q_V^{k+1}(Gamma).
inline TransversalReport complete_transversal(const TruncatedVF& h, const SignedGroup& g) {
    return detail::complete_transversal_impl(h, &g);
}

/// True iff the degree-(k+1) containment theorem holds for the k-jet of h.
/// The theorems guarantee true; false signals a bug.
inline bool verify_containment(const TruncatedVF& h, int k) {
    return complete_transversal(h.truncated_to(k)).contained;
}

inline bool verify_containment(const TruncatedVF& h, int k, const SignedGroup& g) {
    return complete_transversal(h.truncated_to(k), g).contained;
}

} // namespace nfct
