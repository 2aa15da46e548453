#pragma once

// Bezout matrix B(P,Q) of two polynomials with deg Q <= deg P = n, built by
// two routes that share no code:
//   * product form   H(p)*T(q) - H(q)*T(p) with Hankel/Toeplitz factors,
//   * bilinear form  coefficients of (P(x)Q(y) - P(y)Q(x)) / (x - y).
// B is symmetric; entry (i,j) carries x^(i-1) y^(j-1) of the bilinear form.

#include <stdexcept>
#include <utility>
#include <vector>

#include "bzt/matrix.hpp"
#include "bzt/polynomial.hpp"

namespace bzt {

// Validated input pair. Q's coefficients are zero-padded to length n+1.
struct BezoutInput {
    Polynomial p;
    Polynomial q;
    int n;

    BezoutInput(Polynomial p_in, Polynomial q_in) : p(std::move(p_in)), q(std::move(q_in)), n(p.degree()) {
        if (n < 1) throw std::invalid_argument("P must have degree at least 1");
        if (q.degree() > n) throw std::invalid_argument("degree order violated");
    }
};

namespace detail {

// H[i][j] = c[i+j+1] above the anti-diagonal, zero below (0-based).
inline RationalMatrix hankel_factor(const Polynomial& c, int n) {
    RationalMatrix h(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j + 1 <= n) h.at(i, j) = c.coeff(i + j + 1);
    return h;
}

// Upper-triangular Toeplitz: T[i][j] = c[j-i] for j >= i.
inline RationalMatrix toeplitz_factor(const Polynomial& c, int n) {
    RationalMatrix t(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) t.at(i, j) = c.coeff(j - i);
    return t;
}

}  // namespace detail

inline RationalMatrix bezout_via_product(const BezoutInput& in) {
    int n = in.n;
    return detail::hankel_factor(in.p, n) * detail::toeplitz_factor(in.q, n) -
           detail::hankel_factor(in.q, n) * detail::toeplitz_factor(in.p, n);
}

// Divides the bivariate numerator P(x)Q(y) - P(y)Q(x) by (x - y) exactly.
// With N[r][s] the numerator coefficient of x^r y^s and c[a][b] the quotient
// coefficient of x^a y^b, matching coefficients of (x - y) * quotient gives
// N[r][s] = c[r-1][s] - c[r][s-1], solved as c[a][b] = N[a+1][b] + c[a+1][b-1]
// in ascending b. The division is exact because the numerator vanishes on
// the diagonal x = y.
inline RationalMatrix bezout_via_bilinear(const BezoutInput& in) {
    int n = in.n;
    auto numer = [&in](int r, int s) { return in.p.coeff(r) * in.q.coeff(s) - in.q.coeff(r) * in.p.coeff(s); };
    std::vector<std::vector<Rational>> c(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            Rational v = numer(a + 1, b);
            if (b >= 1 && a + 1 < n) v += c[static_cast<std::size_t>(a + 1)][static_cast<std::size_t>(b - 1)];
            c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
        }
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

struct DetIdentity {
    Rational lhs;  // det B(P,Q)
    Rational rhs;  // (-1)^(n(n-1)/2) * p_n^n * prod_j Q(x_j)
};

// The closed form for det B(P,Q) when P is given by its roots: the full
// determinant reduces to the product of Q over the roots of P, up to the
// leading-coefficient power and the anti-diagonal orientation sign.
inline DetIdentity bezout_det_identity(const RootForm& rf, const Polynomial& q) {
    BezoutInput in(expand(rf), q);
    int n = in.n;
    DetIdentity out;
    out.lhs = det(bezout_via_product(in));
    Rational prod(1);
    for (const Rational& x : rf.roots) prod *= q.eval(x);
    out.rhs = pow_rational(rf.leading, static_cast<unsigned>(n)) * prod;
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) out.rhs = -out.rhs;
    return out;
}

}  // namespace bzt
