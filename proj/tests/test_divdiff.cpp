#include <catch2/catch_amalgamated.hpp>

#include "bzt/divided_differences.hpp"
#include "bzt/instances.hpp"
#include "bzt/matrix.hpp"
#include "bzt/newton.hpp"
#include "support/oracles.hpp"

using namespace bzt;
using testsupport::frac;

namespace {

// Random node sequence of length n with grouped repetitions.
NodeSequence grouped_nodes(Rng& rng, int n, int max_mult = 3) {
    NodeSequence nodes;
    std::vector<int> parts;
    int left = n;
    while (left > 0) {
        int m = static_cast<int>(rng.range(1, std::min(max_mult, left)));
        parts.push_back(m);
        left -= m;
    }
    std::vector<Rational> bases = distinct_rationals(rng, static_cast<int>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int r = 0; r < parts[i]; ++r) nodes.push_back(bases[i]);
    return nodes;
}

}  // namespace

TEST_CASE("deflation engine on known values") {
    CHECK(divdiff_poly(testsupport::example1_q(), {frac(-1), frac(1), frac(4)}) == -2);
    CHECK(divdiff_poly(Polynomial({7}), {frac(1), frac(2)}) == 0);
    CHECK(divdiff_poly(Polynomial({7}), {frac(1), frac(2), frac(5)}) == 0);
    CHECK(divdiff_poly(Polynomial({0, 0, 1}), {frac(3), frac(3)}) == 6);
    CHECK_THROWS_AS(divdiff_poly(Polynomial({1}), NodeSequence{}), std::invalid_argument);
}

TEST_CASE("recursive engine base cases") {
    Polynomial q = testsupport::example1_q();
    CHECK(divdiff_recursive(q, {frac(4)}) == q.eval(Rational(4)));
    // classical first-branch recursion over distinct nodes
    Rational lo = divdiff_recursive(q, {frac(-1), frac(1)});
    Rational hi = divdiff_recursive(q, {frac(1), frac(4)});
    CHECK(divdiff_recursive(q, {frac(-1), frac(1), frac(4)}) == (hi - lo) / (frac(4) - frac(-1)));
    CHECK(divdiff_recursive(q, {frac(-1), frac(1), frac(4)}) == -2);
}

TEST_CASE("recursive engine handles repeated endpoints") {
    Polynomial cube({0, 0, 0, 1});
    NodeSequence nodes{frac(2), frac(2), frac(5)};
    CHECK(divdiff_recursive(cube, nodes) == divdiff_poly(cube, nodes));
    NodeSequence twisted{frac(2), frac(5), frac(2)};
    CHECK(divdiff_recursive(cube, twisted) == divdiff_poly(cube, twisted));
    NodeSequence triple{frac(2), frac(2), frac(2)};
    CHECK(divdiff_recursive(cube, triple) == divdiff_poly(cube, triple));
    CHECK(divdiff_poly(cube, triple) == 6);  // g''(2)/2! = 12/2
}

TEST_CASE("confluent table engine against sampled data") {
    Polynomial q({3, -2, 0, 1, 5});
    NodeSequence nodes{frac(-1), frac(-1), frac(0), frac(2), frac(2), frac(2)};
    HermiteData data = hermite_from_polynomial(q, nodes);
    CHECK(divdiff_hermite(data, nodes) == divdiff_poly(q, nodes));

    NodeSequence simple{frac(1), frac(3), frac(7)};
    CHECK(divdiff_hermite(hermite_from_polynomial(q, simple), simple) == divdiff_poly(q, simple));

    HermiteData zeros{{{frac(0), {Rational(0), Rational(0)}}, {frac(1), {Rational(0)}}}};
    CHECK(divdiff_hermite(zeros, {frac(0), frac(0), frac(1)}) == 0);
}

TEST_CASE("confluent table rejects bad input") {
    Polynomial q({1, 1});
    NodeSequence ungrouped{frac(1), frac(2), frac(1)};
    HermiteData data = hermite_from_polynomial(q, {frac(1), frac(1), frac(2)});
    CHECK_THROWS_WITH(divdiff_hermite(data, ungrouped), "nodes must be grouped");

    HermiteData shallow{{{frac(1), {Rational(2)}}, {frac(2), {Rational(3)}}}};
    CHECK_THROWS_WITH(divdiff_hermite(shallow, {frac(1), frac(1), frac(2)}), "insufficient Hermite data");
    CHECK_THROWS_WITH(divdiff_hermite(shallow, {frac(1), frac(5)}), "insufficient Hermite data");
}

TEST_CASE("delta matrix layout on the worked examples") {
    DeltaMatrix d1 = delta_matrix(testsupport::example1_q(), {frac(-1), frac(1), frac(4)});
    CHECK(d1.matrix == testsupport::example1_delta());
    DeltaMatrix d2 = delta_matrix(testsupport::example2_q(), {frac(2), frac(4), frac(6)});
    CHECK(d2.matrix == testsupport::example2_delta());
    DeltaMatrix single = delta_matrix(Polynomial({3, 1}), {frac(5)});
    CHECK(single.size() == 1);
    CHECK(single.matrix.at(0, 0) == 8);
}

TEST_CASE("zero source gives the zero delta matrix") {
    DeltaMatrix z = delta_matrix(Polynomial(), {frac(1), frac(2), frac(3)});
    CHECK(z.matrix == RationalMatrix(3));
}

TEST_CASE("duplicate Hermite group nodes are rejected") {
    HermiteData dup{{{frac(1), {Rational(2)}}, {frac(1), {Rational(3)}}}};
    CHECK_THROWS_WITH(divdiff_hermite(dup, {frac(1), frac(1)}), "duplicate Hermite group node");
}

TEST_CASE("delta matrix is zero above the anti-diagonal") {
    Rng rng(52001);
    for (int t = 0; t < 40; ++t) {
        int n = static_cast<int>(rng.range(1, 7));
        NodeSequence nodes = grouped_nodes(rng, n);
        Polynomial g = random_polynomial(rng, static_cast<int>(rng.range(0, n + 1)));
        DeltaMatrix delta = delta_matrix(g, nodes);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i + j < n + 1) CHECK(delta.matrix.at(i - 1, j - 1) == 0);
    }
}

TEST_CASE("interpolation reproduces low-degree polynomials") {
    Rng rng(52002);
    for (int t = 0; t < 60; ++t) {
        int n = static_cast<int>(rng.range(1, 7));
        NodeSequence nodes = distinct_rationals(rng, n);
        Polynomial q = random_polynomial(rng, static_cast<int>(rng.range(0, n - 1)));
        CHECK(newton_interp(q, nodes) == q);
    }
}

TEST_CASE("interpolant of the second worked example") {
    Polynomial interp = newton_interp(testsupport::example2_q(), {frac(2), frac(4), frac(6)});
    CHECK(interp == Polynomial({33, -21, 3}));
}

TEST_CASE("Hermite data with one double node gives the tangent line") {
    // g(a) + g'(a)(x - a) at a = 3 for g with g(3) = 4, g'(3) = -2
    HermiteData data{{{frac(3), {Rational(4), Rational(-2)}}}};
    Polynomial line = newton_interp(data, {frac(3), frac(3)});
    CHECK(line == Polynomial({10, -2}));
}

TEST_CASE("interpolant matches Hermite derivative data") {
    Rng rng(52003);
    for (int t = 0; t < 40; ++t) {
        int n = static_cast<int>(rng.range(2, 6));
        NodeSequence nodes = grouped_nodes(rng, n);
        Polynomial g = random_polynomial(rng, n + 2);
        HermiteData data = hermite_from_polynomial(g, nodes);
        Polynomial interp = newton_interp(data, nodes);
        CHECK(interp.degree() <= n - 1);
        for (const HermiteGroup& grp : data.groups) {
            Polynomial d = interp;
            for (std::size_t r = 0; r < grp.values.size(); ++r) {
                CHECK(d.eval(grp.node) == grp.values[r]);
                d = derivative(d);
            }
        }
    }
}

TEST_CASE("the three engines agree") {
    Rng rng(52004);
    for (int t = 0; t < 200; ++t) {
        int n = static_cast<int>(rng.range(1, 7));
        NodeSequence nodes = grouped_nodes(rng, n);
        Polynomial g = random_polynomial(rng, static_cast<int>(rng.range(0, n + 1)));
        Rational reference = divdiff_poly(g, nodes);
        CAPTURE(t, n);
        CHECK(divdiff_recursive(g, nodes) == reference);
        CHECK(divdiff_hermite(hermite_from_polynomial(g, nodes), nodes) == reference);
    }
}

TEST_CASE("divided differences of distinct nodes are permutation symmetric") {
    Rng rng(52005);
    for (int t = 0; t < 60; ++t) {
        int n = static_cast<int>(rng.range(2, 6));
        NodeSequence nodes = distinct_rationals(rng, n);
        Polynomial g = random_polynomial(rng, static_cast<int>(rng.range(0, n + 1)));
        Rational reference = divdiff_poly(g, nodes);
        NodeSequence shuffled = nodes;
        rng.shuffle(shuffled);
        CHECK(divdiff_poly(g, shuffled) == reference);
    }
}

TEST_CASE("leading-coefficient law") {
    Rng rng(52006);
    for (int t = 0; t < 60; ++t) {
        int d = static_cast<int>(rng.range(0, 4));
        Polynomial q = random_polynomial(rng, d);
        NodeSequence exact = distinct_rationals(rng, d + 1);
        CHECK(divdiff_poly(q, exact) == q.coeff(d));
        NodeSequence extra = distinct_rationals(rng, d + 2);
        CHECK(divdiff_poly(q, extra) == 0);
    }
}

TEST_CASE("trailing delta minors ignore the node order") {
    Rng rng(52007);
    for (int t = 0; t < 30; ++t) {
        int n = static_cast<int>(rng.range(2, 6));
        NodeSequence nodes = distinct_rationals(rng, n);
        Polynomial g = random_polynomial(rng, static_cast<int>(rng.range(0, n)));
        MinorSequence reference = trailing_minors(delta_matrix(g, nodes).matrix);
        for (int perm = 0; perm < 6; ++perm) {
            NodeSequence shuffled = nodes;
            rng.shuffle(shuffled);
            MinorSequence other = trailing_minors(delta_matrix(g, shuffled).matrix);
            CHECK(other.values == reference.values);
        }
    }
}
