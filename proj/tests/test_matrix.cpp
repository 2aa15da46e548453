#include <catch2/catch_amalgamated.hpp>

#include "bzt/matrix.hpp"
#include "support/oracles.hpp"

using namespace bzt;
using testsupport::cofactor_det;
using testsupport::mat;

TEST_CASE("det on known matrices") {
    CHECK(det(RationalMatrix::identity(4)) == 1);
    CHECK(det(testsupport::example2_b()) == 135);
    CHECK(det(mat({{1, 2, 3}, {4, 5, 6}, {1, 2, 3}})) == 0);
    CHECK(det(RationalMatrix(0)) == 1);
}

TEST_CASE("det handles rational entries and zero pivots") {
    RationalMatrix m(3);
    m.at(0, 0) = 0;
    m.at(0, 1) = make_rational(1, 2);
    m.at(0, 2) = make_rational(-2, 3);
    m.at(1, 0) = make_rational(3, 4);
    m.at(1, 1) = 0;
    m.at(1, 2) = make_rational(5, 6);
    m.at(2, 0) = make_rational(-1, 7);
    m.at(2, 1) = make_rational(2, 5);
    m.at(2, 2) = 0;
    CHECK(det(m) == cofactor_det(m));
}

TEST_CASE("trailing minors of the worked examples") {
    MinorSequence m1 = trailing_minors(testsupport::example1_b());
    REQUIRE(m1.size() == 3);
    CHECK(m1.at_size(1) == -2);
    CHECK(m1.at_size(2) == -24);
    CHECK(m1.at_size(3) == 0);

    MinorSequence m2 = trailing_minors(testsupport::example2_delta());
    CHECK(m2.at_size(1) == 3);
    CHECK(m2.at_size(2) == 18);
    CHECK(m2.at_size(3) == 135);

    MinorSequence z = trailing_minors(RationalMatrix(3));
    CHECK((z.at_size(1) == 0 && z.at_size(2) == 0 && z.at_size(3) == 0));
}

TEST_CASE("rank on known matrices") {
    CHECK(rank(testsupport::example1_b()) == 2);
    CHECK(rank(RationalMatrix::identity(5)) == 5);
    CHECK(rank(RationalMatrix(4)) == 0);
    CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("det agrees with the cofactor oracle") {
    Rng rng(20260401);
    for (int i = 0; i < 60; ++i) {
        int n = static_cast<int>(rng.range(1, 5));
        RationalMatrix m = testsupport::random_matrix(rng, n);
        CAPTURE(n, i);
        CHECK(det(m) == cofactor_det(m));
    }
}

TEST_CASE("largest trailing minor is the determinant") {
    Rng rng(20260402);
    for (int i = 0; i < 40; ++i) {
        RationalMatrix m = testsupport::random_matrix(rng, static_cast<int>(rng.range(1, 6)));
        MinorSequence seq = trailing_minors(m);
        CHECK(seq.at_size(m.size()) == det(m));
    }
}

TEST_CASE("full rank iff nonzero determinant") {
    Rng rng(20260403);
    for (int i = 0; i < 60; ++i) {
        int n = static_cast<int>(rng.range(1, 5));
        RationalMatrix m = testsupport::random_matrix(rng, n);
        if (rng.coin()) {
            // plant a dependent row
            int a = static_cast<int>(rng.range(0, n - 1));
            int b = static_cast<int>(rng.range(0, n - 1));
            if (a != b)
                for (int j = 0; j < n; ++j) m.at(a, j) = Rational(2) * m.at(b, j);
        }
        CHECK((rank(m) == n) == (det(m) != 0));
    }
}

TEST_CASE("determinant is multiplicative") {
    Rng rng(20260404);
    for (int i = 0; i < 30; ++i) {
        int n = static_cast<int>(rng.range(1, 4));
        RationalMatrix a = testsupport::random_matrix(rng, n);
        RationalMatrix b = testsupport::random_matrix(rng, n);
        CHECK(det(a * b) == det(a) * det(b));
    }
}
