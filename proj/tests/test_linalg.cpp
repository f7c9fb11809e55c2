#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tamerep/linalg.hpp"

using namespace tamerep;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(3, 7).den() == 7);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational overflow raises and big fallback narrows") {
    Rational big(0x3fffffffffffffffLL);
    CHECK_THROWS_AS(big * big, RationalOverflow);
    BigRational b = big.big() + 1;
    CHECK(Rational::from_big(b - 1) == big);
}

TEST_CASE("rank basics") {
    CHECK(rank(Matrix::identity(2)) == 2);
    CHECK(rank(Matrix::zero(3, 4)) == 0);
    CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("kernel basis contracts") {
    CHECK(kernel_basis(Matrix::identity(2)).empty());
    CHECK(kernel_basis(Matrix::zero(2, 3)).size() == 3);

    Matrix m{{1, 1}};
    auto kb = kernel_basis(m);
    REQUIRE(kb.size() == 1);
    // spans (1,-1)
    CHECK(kb[0][0] == -kb[0][1]);
    CHECK(kb[0][0] != Rational(0));

    // rank-nullity and exactness on a few fixed matrices
    for (const Matrix& a : {Matrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, Matrix{{2, 0}, {0, 0}},
                            Matrix{{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 0, 1}}}) {
        auto basis = kernel_basis(a);
        CHECK((int)basis.size() + rank(a) == a.cols());
        for (auto& v : basis)
            for (auto& entry : a.mul_vec(v)) CHECK(entry == Rational(0));
    }
}

TEST_CASE("solve") {
    Matrix id = Matrix::identity(2);
    Vec b{Rational(3), Rational(5)};
    auto x = solve(id, b);
    REQUIRE(x);
    CHECK(*x == b);

    Matrix col{{1}, {0}};
    auto none = solve(col, Vec{Rational(0), Rational(1)});
    CHECK(!none);

    Matrix two{{2}};
    auto half = solve(two, Vec{Rational(1)});
    REQUIRE(half);
    CHECK((*half)[0] == Rational(1, 2));

    // consistency: m x = b exactly
    Matrix m{{1, 2, 1}, {0, 1, 1}};
    Vec rhs{Rational(4), Rational(2)};
    auto sol = solve(m, rhs);
    REQUIRE(sol);
    CHECK(m.mul_vec(*sol) == rhs);
}

TEST_CASE("quotient coordinates") {
    // full space: everything maps to the empty coordinate vector? no: ambient
    // 2, subspace full -> quotient dim 0, so the zero-length vector
    std::vector<Vec> full{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    CHECK(quotient_coordinates(2, full, {Rational(5), Rational(7)}).empty());

    // trivial subspace: v in ambient coordinates
    Vec v{Rational(3), Rational(4)};
    CHECK(quotient_coordinates(2, {}, v) == v);

    // ambient Q^2 mod span{(1,1)}: v = (1,0) has nonzero 1-coordinate image
    std::vector<Vec> diag{{Rational(1), Rational(1)}};
    auto q = quotient_coordinates(2, diag, {Rational(1), Rational(0)});
    REQUIRE(q.size() == 1);
    CHECK(q[0] == Rational(-1)); // (1,0) - 1*(1,1) = (0,-1), complement coord row 1
    // and a subspace member maps to zero
    auto z = quotient_coordinates(2, diag, {Rational(2), Rational(2)});
    CHECK(z[0] == Rational(0));

    CHECK_THROWS_AS(quotient_coordinates(2, diag, Vec{Rational(1)}), std::invalid_argument);
}

TEST_CASE("column span incremental quotient") {
    ColumnSpan span(3);
    CHECK(span.add({Rational(1), Rational(1), Rational(0)}));
    CHECK(!span.add({Rational(2), Rational(2), Rational(0)}));
    CHECK(span.rank() == 1);
    CHECK(span.quotient_dim() == 2);
    CHECK(span.contains({Rational(-3), Rational(-3), Rational(0)}));
    CHECK(!span.contains({Rational(1), Rational(0), Rational(0)}));
    CHECK(span.add({Rational(0), Rational(0), Rational(1)}));
    CHECK(span.quotient_dim() == 1);
}
