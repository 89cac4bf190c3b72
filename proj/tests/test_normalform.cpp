#include "doctest.h"

#include "nfct/normalform.hpp"

#include "testutil.hpp"

using namespace nfct;
using testutil::Rng;

namespace {

const RatMatrix kBogdanovTakens{{0, 1}, {0, 0}};

SignedGroup z2_reversing() {
    return generate_group(2, {SignedElement{RatMatrix{{1, 0}, {0, -1}}, -1}});
}

HomogeneousVF random_hvf(Rng& rng, size_t n, int k) {
    SliceBasis b = slice_basis(n, k);
    std::vector<Rational> v(b.size());
    for (auto& x : v) x = rng.small_rational();
    return from_coords(v, b);
}

TruncatedVF replay(const TruncatedVF& h, const std::vector<HomogeneousVF>& xis, int N) {
    TruncatedVF cur = h.with_max_degree(N);
    for (const auto& xi : xis)
        if (!xi.is_zero()) cur = pushforward(cur, xi, N);
    return cur;
}

} // namespace

TEST_CASE("split without symmetry") {
    SUBCASE("vectors already in the normal-form space split trivially") {
        const int k = 3;
        Subspace w_space = nf_space_nonsym(kBogdanovTakens, k);
        const SliceBasis b = slice_basis(2, k);
        for (size_t i = 0; i < w_space.dim(); ++i) {
            HomogeneousVF v = from_coords(w_space.basis().row(i), b);
            SplitResult s = split(v, kBogdanovTakens);
            CHECK(s.w == v);
            CHECK(s.xi.is_zero());
        }
    }
    SUBCASE("identity linear part scales by Euler") {
        Rng rng(151);
        for (int k = 2; k <= 4; ++k) {
            HomogeneousVF v = random_hvf(rng, 2, k);
            SplitResult s = split(v, RatMatrix::identity(2));
            CHECK(s.w.is_zero());
            CHECK(s.xi == Rational(1, k - 1) * v);
        }
    }
    SUBCASE("scalar slice: v = x^2 with L = 1") {
        HomogeneousVF v(1, 2);
        v.add_term(0, Exponents{2}, 1);
        SplitResult s = split(v, RatMatrix::identity(1));
        CHECK(s.w.is_zero());
        CHECK(s.xi == v);
    }
    SUBCASE("reconstruction identity on random input") {
        Rng rng(157);
        const TruncatedVF id1 = TruncatedVF::from_linear(RatMatrix::identity(2), 1);
        for (int iter = 0; iter < 12; ++iter) {
            RatMatrix L = rng.matrix(2, 2);
            const TruncatedVF lin = TruncatedVF::from_linear(L, 1);
            const int k = static_cast<int>(rng.int_between(2, 4));
            HomogeneousVF v = random_hvf(rng, 2, k);
            SplitResult s = split(v, L);
            CHECK(s.w + ad_apply(lin, s.xi, k) == v);
            CHECK(in_span(to_coords(s.w, slice_basis(2, k)), nf_space_nonsym(L, k)));
        }
    }
}

TEST_CASE("split in the reversible-equivariant slices") {
    SignedGroup g = z2_reversing();
    Rng rng(163);
    const TruncatedVF lin = TruncatedVF::from_linear(kBogdanovTakens, 1);
    SUBCASE("reconstruction, membership, and equivariance of xi") {
        for (int iter = 0; iter < 10; ++iter) {
            const int k = static_cast<int>(rng.int_between(2, 4));
            HomogeneousVF v = reynolds_reversible(random_hvf(rng, 2, k), g);
            SplitResult s = split(v, kBogdanovTakens, g);
            CHECK(s.w + ad_apply(lin, s.xi, k) == v);
            CHECK(is_equivariant(s.xi, g));
            CHECK(in_span(to_coords(s.w, slice_basis(2, k)), nf_space_reveq(kBogdanovTakens, g, k)));
        }
    }
    SUBCASE("fields outside Q^k are rejected") {
        HomogeneousVF bad(2, 2);
        bad.add_term(0, Exponents{2, 0}, 1); // (x^2, 0) is equivariant, not reversible
        CHECK_THROWS_AS(split(bad, kBogdanovTakens, g), NotInTargetSlice);
    }
    SUBCASE("non-reversible linear part is rejected") {
        HomogeneousVF v(2, 2);
        v.add_term(1, Exponents{2, 0}, 1);
        CHECK_THROWS_AS(split(v, RatMatrix::identity(2), g), LinearPartNotReversible);
    }
}

TEST_CASE("reduce") {
    SUBCASE("fields already in normal form are fixed points") {
        TruncatedVF h(2, 4);
        h.set_part(HomogeneousVF::linear(kBogdanovTakens));
        for (int k = 2; k <= 4; ++k) {
            HomogeneousVF w(2, k);
            Exponents xk(2, 0);
            xk[0] = k;
            w.add_term(1, xk, Rational(k)); // multiples of (0, x^k) are resonant
            w.add_term(0, xk, 1);           // (x^k, x^{k-1} y) completes the kernel
            Exponents xk1y{k - 1, 1};
            w.add_term(1, xk1y, 1);
            h.add_part(w);
        }
        ReductionResult r = reduce(h, 4);
        CHECK(r.g == h);
        for (const auto& xi : r.xis) CHECK(xi.is_zero());
        for (bool flag : r.certificate) CHECK(flag);
    }
    SUBCASE("scalar formal linearization: x + x^2 reduces to y") {
        TruncatedVF h(1, 2);
        h.add_term(0, Exponents{1}, 1);
        h.add_term(0, Exponents{2}, 1);
        for (int N : {3, 4}) {
            ReductionResult r = reduce(h, N);
            CHECK(r.g == TruncatedVF::from_linear(RatMatrix::identity(1), N));
            for (bool flag : r.certificate) CHECK(flag);
        }
    }
    SUBCASE("replaying the stored changes reproduces g bit-exactly") {
        Rng rng(167);
        for (int iter = 0; iter < 10; ++iter) {
            const size_t n = 2;
            const int N = 4;
            TruncatedVF h(n, N);
            for (int d = 1; d <= N; ++d) h.set_part(random_hvf(rng, n, d));
            ReductionResult r = reduce(h, N);
            CHECK(replay(h, r.xis, N) == r.g);
            CHECK(r.g.part(1) == h.part(1)); // linear part untouched
            for (bool flag : r.certificate) CHECK(flag);
        }
    }
    SUBCASE("idempotence") {
        Rng rng(173);
        TruncatedVF h(2, 4);
        for (int d = 1; d <= 4; ++d) h.set_part(random_hvf(rng, 2, d));
        ReductionResult once = reduce(h, 4);
        ReductionResult twice = reduce(once.g, 4);
        CHECK(twice.g == once.g);
        for (const auto& xi : twice.xis) CHECK(xi.is_zero());
    }
    SUBCASE("degree stability under each applied change") {
        Rng rng(179);
        TruncatedVF h(2, 4);
        for (int d = 1; d <= 4; ++d) h.set_part(random_hvf(rng, 2, d));
        ReductionResult r = reduce(h, 4);
        TruncatedVF cur = h.with_max_degree(4);
        for (size_t i = 0; i < r.xis.size(); ++i) {
            const int k = static_cast<int>(i) + 2;
            if (r.xis[i].is_zero()) continue;
            TruncatedVF next = pushforward(cur, r.xis[i], 4);
            for (int d = 1; d < k; ++d) CHECK(next.part(d) == cur.part(d));
            cur = next;
        }
    }
}

TEST_CASE("reduce in the reversible-equivariant mode") {
    SignedGroup g = z2_reversing();
    Rng rng(181);
    SUBCASE("all intermediates stay reversible-equivariant and land in the 1-dim spaces") {
        for (int iter = 0; iter < 6; ++iter) {
            const int N = 4;
            TruncatedVF h(2, N);
            h.set_part(HomogeneousVF::linear(kBogdanovTakens));
            for (int d = 2; d <= N; ++d) h.set_part(reynolds_reversible(random_hvf(rng, 2, d), g));
            ReductionResult r = reduce(h, N, g);
            CHECK(is_rev_equivariant(r.g, g));
            for (const auto& xi : r.xis) CHECK(is_equivariant(xi, g));
            // intermediate fields: replay prefix by prefix
            TruncatedVF cur = h;
            for (const auto& xi : r.xis) {
                if (!xi.is_zero()) cur = pushforward(cur, xi, N);
                CHECK(is_rev_equivariant(cur, g));
            }
            CHECK(cur == r.g);
            for (int k = 2; k <= N; ++k) {
                CHECK(in_span(to_coords(r.g.part(k), slice_basis(2, k)),
                              nf_space_reveq(kBogdanovTakens, g, k)));
            }
            for (bool flag : r.certificate) CHECK(flag);
        }
    }
    SUBCASE("non-reversible input is rejected") {
        TruncatedVF h(2, 3);
        h.set_part(HomogeneousVF::linear(kBogdanovTakens));
        h.add_term(0, Exponents{2, 0}, 1);
        CHECK_THROWS_AS(reduce(h, 3, g), NotInTargetSlice);
    }
}
