#include "doctest.h"

#include "nfct/matrix.hpp"
#include "nfct/rational.hpp"
#include "nfct/subspace.hpp"

#include "testutil.hpp"

using namespace nfct;
using testutil::Rng;

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK((Rational(1, 2) * Rational(2, 3)).str() == "1/3");
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK(Rational(0).is_zero());
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-0") == Rational(0));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1 / 2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
}

TEST_CASE("rref examples") {
    SUBCASE("identity") {
        RrefResult rr = rref(RatMatrix::identity(3));
        CHECK(rr.matrix == RatMatrix::identity(3));
        CHECK(rr.pivot_cols == std::vector<size_t>{0, 1, 2});
        CHECK(rr.rank == 3);
    }
    SUBCASE("zero") {
        RrefResult rr = rref(RatMatrix(2, 4));
        CHECK(rr.matrix == RatMatrix(2, 4));
        CHECK(rr.pivot_cols.empty());
        CHECK(rr.rank == 0);
    }
    SUBCASE("rank-1 from dependent rows") {
        RrefResult rr = rref(RatMatrix{{1, 2}, {2, 4}});
        CHECK(rr.matrix == RatMatrix{{1, 2}, {0, 0}});
        CHECK(rr.rank == 1);
    }
}

TEST_CASE("rref is idempotent on random matrices") {
    Rng rng(11);
    for (int iter = 0; iter < 40; ++iter) {
        RatMatrix m = rng.matrix(static_cast<size_t>(rng.int_between(1, 5)),
                                 static_cast<size_t>(rng.int_between(1, 6)));
        RrefResult once = rref(m);
        RrefResult twice = rref(once.matrix);
        CHECK(once.matrix == twice.matrix);
        CHECK(once.pivot_cols == twice.pivot_cols);
    }
}

TEST_CASE("kernel_basis") {
    SUBCASE("invertible map has trivial kernel") {
        CHECK(kernel_basis(RatMatrix::identity(4)).dim() == 0);
    }
    SUBCASE("zero map has full kernel") {
        Subspace k = kernel_basis(RatMatrix(2, 3));
        CHECK(k.dim() == 3);
        CHECK(k == Subspace::full(3));
    }
    SUBCASE("one relation") {
        RatMatrix m{{1, 1, 0}};
        Subspace k = kernel_basis(m);
        CHECK(k.dim() == 2);
        for (size_t i = 0; i < k.dim(); ++i) {
            std::vector<Rational> image = m * k.basis().row(i);
            for (const auto& x : image) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("kernel vectors multiply back to zero (random)") {
    Rng rng(23);
    for (int iter = 0; iter < 40; ++iter) {
        RatMatrix m = rng.matrix(static_cast<size_t>(rng.int_between(1, 4)),
                                 static_cast<size_t>(rng.int_between(1, 6)));
        Subspace k = kernel_basis(m);
        RrefResult rr = rref(m);
        CHECK(k.dim() == m.cols() - rr.rank);
        for (size_t i = 0; i < k.dim(); ++i) {
            std::vector<Rational> image = m * k.basis().row(i);
            for (const auto& x : image) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("subspace sum and intersection examples") {
    Subspace ex = Subspace::span_of_rows(RatMatrix{{1, 0}});
    Subspace ey = Subspace::span_of_rows(RatMatrix{{0, 1}});

    SUBCASE("complementary lines") {
        CHECK(subspace_intersect(ex, ey).dim() == 0);
        SumResult s = subspace_sum(ex, ey);
        CHECK(s.sum == Subspace::full(2));
        CHECK(s.is_direct);
    }
    SUBCASE("idempotence") {
        CHECK(subspace_intersect(ex, ex) == ex);
        SumResult s = subspace_sum(ex, ex);
        CHECK(s.sum == ex);
        CHECK_FALSE(s.is_direct);
        SumResult z = subspace_sum(Subspace::zero(2), Subspace::zero(2));
        CHECK(z.is_direct);
    }
    SUBCASE("ambient mismatch") {
        CHECK_THROWS_AS(subspace_intersect(ex, Subspace::zero(3)), AmbientMismatch);
        CHECK_THROWS_AS(subspace_sum(ex, Subspace::zero(3)), AmbientMismatch);
    }
}

TEST_CASE("Grassmann identity on random subspaces") {
    Rng rng(37);
    for (int iter = 0; iter < 30; ++iter) {
        const size_t n = 4;
        Subspace a = Subspace::span_of_rows(rng.matrix(3, n));
        Subspace b = Subspace::span_of_rows(rng.matrix(2, n));
        Subspace i = subspace_intersect(a, b);
        SumResult s = subspace_sum(a, b);
        CHECK(s.sum.dim() + i.dim() == a.dim() + b.dim());
        CHECK(i.dim() == a.dim() + b.dim() - s.sum.dim());
        CHECK(a.contains(i));
        CHECK(b.contains(i));
        CHECK(s.sum.contains(a));
        CHECK(s.sum.contains(b));
    }
}

TEST_CASE("canonicity: any basis of the same space reduces identically") {
    Rng rng(41);
    for (int iter = 0; iter < 25; ++iter) {
        const size_t n = 5;
        RatMatrix rows = rng.matrix(3, n);
        Subspace a = Subspace::span_of_rows(rows);
        // mix the rows through a random invertible transform
        RatMatrix t(3, 3);
        do {
            t = rng.matrix(3, 3);
        } while (rref(t).rank < 3);
        Subspace b = Subspace::span_of_rows(t * rows);
        CHECK(a == b);
    }
}

TEST_CASE("in_span") {
    Subspace s = Subspace::span_of_rows(RatMatrix{{1, 0}});
    CHECK(in_span({Rational(0), Rational(0)}, s));
    CHECK(in_span({Rational(5), Rational(0)}, s));
    CHECK_FALSE(in_span({Rational(1), Rational(1)}, s));
    CHECK_THROWS_AS(in_span({Rational(1)}, s), AmbientMismatch);
    SUBCASE("basis vectors of s lie in s") {
        Rng rng(53);
        Subspace r = Subspace::span_of_rows(rng.matrix(3, 5));
        for (size_t i = 0; i < r.dim(); ++i) CHECK(in_span(r.basis().row(i), r));
    }
}

TEST_CASE("solve_pivot returns the free-variables-zero solution") {
    RatMatrix m{{1, 2, 0}, {0, 0, 1}};
    std::vector<Rational> rhs{Rational(3), Rational(4)};
    std::vector<Rational> x = solve_pivot(m, rhs);
    CHECK(x == std::vector<Rational>{Rational(3), Rational(0), Rational(4)});
    CHECK(m * x == rhs);
    CHECK_THROWS_AS(solve_pivot(RatMatrix{{1, 1}, {1, 1}}, rhs), InternalCheckFailure);
}

TEST_CASE("matrix inverse") {
    RatMatrix m{{1, 2}, {3, 4}};
    CHECK(inverse(m) * m == RatMatrix::identity(2));
    CHECK_THROWS_AS(inverse(RatMatrix{{1, 2}, {2, 4}}), SingularMatrix);
}
