#pragma once

#include <map>
#include <utility>
#include <vector>

#include "nfct/errors.hpp"
#include "nfct/matrix.hpp"
#include "nfct/polyvec.hpp"
#include "nfct/rational.hpp"
#include "nfct/subspace.hpp"

namespace nfct {

/// A group element gamma together with its sign: sigma = +1 for symmetries,
/// -1 for reversing symmetries.
struct SignedElement {
    RatMatrix rho;
    int sigma = 1;

    /// sigma(gamma) rho(gamma), the dual-representation image of gamma.
    RatMatrix rho_sigma() const { return sigma < 0 ? -rho : rho; }

    friend bool operator==(const SignedElement& a, const SignedElement& b) {
        return a.sigma == b.sigma && a.rho == b.rho;
    }
};

/// Finite matrix group with a sign character. Element 0 is the identity;
/// order of the rest is the breadth-first closure order, so it is stable
/// across runs.
class SignedGroup {
public:
    static SignedGroup trivial(size_t n) {
        return SignedGroup(n, {SignedElement{RatMatrix::identity(n), 1}});
    }

    size_t n() const { return n_; }
    size_t order() const { return elements_.size(); }
    const std::vector<SignedElement>& elements() const { return elements_; }

    bool has_reversing() const {
        for (const auto& el : elements_)
            if (el.sigma < 0) return true;
        return false;
    }

private:
    friend SignedGroup generate_group(size_t, const std::vector<SignedElement>&, size_t);

    SignedGroup(size_t n, std::vector<SignedElement> els) : n_(n), elements_(std::move(els)) {}

    size_t n_;
    std::vector<SignedElement> elements_;
};

/// Breadth-first closure of the generators under multiplication, signs
/// multiplied along. Throws NotFinite past `cap` elements and
/// SigmaInconsistent when one matrix shows up with both signs.
inline SignedGroup generate_group(size_t n, const std::vector<SignedElement>& generators, size_t cap = 1024) {
    if (cap < 1) throw ValidationError("group cap must be at least 1");
    for (const auto& g : generators) {
        if (g.rho.rows() != n || g.rho.cols() != n)
            throw DimensionMismatch("group generator is not n x n");
        if (g.sigma != 1 && g.sigma != -1) throw ValidationError("generator sigma must be +1 or -1");
        try {
            (void)inverse(g.rho);
        } catch (const SingularMatrix&) {
            throw NotInvertible("group generator is singular");
        }
    }
    std::vector<SignedElement> elements{SignedElement{RatMatrix::identity(n), 1}};
    std::map<RatMatrix, int> seen{{elements[0].rho, 1}};
    for (size_t i = 0; i < elements.size(); ++i) {
        for (const auto& g : generators) {
            SignedElement next{elements[i].rho * g.rho, elements[i].sigma * g.sigma};
            auto it = seen.find(next.rho);
            if (it != seen.end()) {
                if (it->second != next.sigma)
                    throw SigmaInconsistent("matrix reached with conflicting signs; sigma is not a homomorphism");
                continue;
            }
            if (elements.size() >= cap) throw NotFinite("group closure exceeds the cap; generators are not finite");
            seen.emplace(next.rho, next.sigma);
            elements.push_back(std::move(next));
        }
    }
    return SignedGroup(n, std::move(elements));
}

enum class SliceMode { Equivariant, Reversible };

/// The dual action of gamma on fields: p -> rho_*(gamma)^{-1} p(rho(gamma) x),
/// where rho_* is rho itself in equivariant mode and sigma rho in reversible
/// mode. Fixed points are exactly the (reversible-)equivariant fields.
inline HomogeneousVF dual_act(const SignedElement& el, const HomogeneousVF& p, SliceMode mode) {
    const size_t n = p.nvars();
    if (el.rho.rows() != n || el.rho.cols() != n)
        throw DimensionMismatch("group element dimension != field dimension");
    std::vector<Poly> repl;
    repl.reserve(n);
    for (size_t j = 0; j < n; ++j) {
        Poly lin(n);
        for (size_t m = 0; m < n; ++m) {
            if (el.rho(j, m).is_zero()) continue;
            Exponents e(n, 0);
            e[m] = 1;
            lin.add_term(std::move(e), el.rho(j, m));
        }
        repl.push_back(std::move(lin));
    }
    std::vector<Poly> moved;
    moved.reserve(n);
    for (size_t i = 0; i < n; ++i) moved.push_back(substitute(p.component(i), repl, -1));

    RatMatrix left = inverse(el.rho);
    if (mode == SliceMode::Reversible && el.sigma < 0) left = -left;
    std::vector<Poly> out(n, Poly(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!left(i, j).is_zero()) out[i] += left(i, j) * moved[j];
    return HomogeneousVF::from_components(std::move(out), p.degree());
}

namespace detail {

inline HomogeneousVF reynolds(const HomogeneousVF& p, const SignedGroup& g, SliceMode mode) {
    if (p.nvars() != g.n()) throw DimensionMismatch("field dimension != group dimension");
    HomogeneousVF acc(p.nvars(), p.degree());
    for (const auto& el : g.elements()) acc += dual_act(el, p, mode);
    acc *= Rational(1, static_cast<long>(g.order()));
    return acc;
}

} // namespace detail

/// Group average (1/|G|) sum rho(gamma)^{-1} p(rho(gamma) x): the projector
/// onto Gamma-equivariant fields.
inline HomogeneousVF reynolds_equivariant(const HomogeneousVF& p, const SignedGroup& g) {
    return detail::reynolds(p, g, SliceMode::Equivariant);
}

/// Same average with the sigma-twisted left factor: projects onto
/// Gamma-reversible-equivariant fields.
inline HomogeneousVF reynolds_reversible(const HomogeneousVF& p, const SignedGroup& g) {
    return detail::reynolds(p, g, SliceMode::Reversible);
}

inline bool is_equivariant(const HomogeneousVF& p, const SignedGroup& g) {
    for (const auto& el : g.elements())
        if (dual_act(el, p, SliceMode::Equivariant) != p) return false;
    return true;
}

inline bool is_rev_equivariant(const HomogeneousVF& p, const SignedGroup& g) {
    for (const auto& el : g.elements())
        if (dual_act(el, p, SliceMode::Reversible) != p) return false;
    return true;
}

inline bool is_rev_equivariant(const TruncatedVF& h, const SignedGroup& g) {
    for (const auto& [d, p] : h.parts())
        if (!is_rev_equivariant(p, g)) return false;
    return true;
}

/// P_V^k(Gamma) or Q_V^k(Gamma) as a canonical subspace of the slice: the
/// image of the corresponding Reynolds projector.
inline Subspace fixed_slice(const SignedGroup& g, int k, SliceMode mode) {
    if (k < 1) throw DegreeError("fixed_slice needs degree >= 1");
    const SliceBasis basis = slice_basis(g.n(), k);
    RatMatrix rows(basis.size(), basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        HomogeneousVF unit(g.n(), k);
        unit.add_term(basis.term(j), 1);
        rows.set_row(j, to_coords(detail::reynolds(unit, g, mode), basis));
    }
    return Subspace::span_of_rows(rows);
}

/// Character-theoretic dimension of the fixed slice:
/// (1/|G|) sum_gamma trace(action of gamma on P_V^k). Independent of
/// fixed_slice, so the two serve as cross-checking oracles.
inline long dim_by_trace(const SignedGroup& g, int k, SliceMode mode) {
    if (k < 1) throw DegreeError("dim_by_trace needs degree >= 1");
    const SliceBasis basis = slice_basis(g.n(), k);
    Rational total;
    for (const auto& el : g.elements())
        for (size_t j = 0; j < basis.size(); ++j) {
            HomogeneousVF unit(g.n(), k);
            unit.add_term(basis.term(j), 1);
            total += dual_act(el, unit, mode).coefficient(basis.term(j));
        }
    total /= Rational(static_cast<long>(g.order()));
    if (!total.is_integer() || total.sign() < 0)
        throw NonIntegerTrace("group-averaged trace " + total.str() + " is not a nonnegative integer");
    return total.as_long();
}

/// True iff L rho(gamma) = rho_sigma(gamma) L for every group element.
inline bool is_rev_equivariant_linear(const RatMatrix& L, const SignedGroup& g) {
    if (!L.is_square() || L.rows() != g.n())
        throw DimensionMismatch("linear part dimension != group dimension");
    for (const auto& el : g.elements())
        if (L * el.rho != el.rho_sigma() * L) return false;
    return true;
}

} // namespace nfct
