#pragma once

// Sturm chains over exact rationals: distinct-real-root counting on
// half-open intervals (a, b] and bisection-based root isolation.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bzt/polynomial.hpp"

namespace bzt {

// p, p', then negated Euclidean remainders down to a constant. The last
// nonzero element is gcd(p, p') up to a scalar.
struct SturmChain {
    std::vector<Polynomial> seq;
};

inline SturmChain sturm_chain(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no Sturm chain");
    SturmChain chain;
    chain.seq.push_back(p);
    Polynomial d = derivative(p);
    if (d.is_zero()) return chain;
    chain.seq.push_back(d);
    while (true) {
        const Polynomial& a = chain.seq[chain.seq.size() - 2];
        const Polynomial& b = chain.seq[chain.seq.size() - 1];
        Polynomial r = -rem(a, b);
        if (r.is_zero()) break;
        chain.seq.push_back(std::move(r));
    }
    return chain;
}

// Sign variations of the chain at x, zeros skipped.
inline int sign_variations(const SturmChain& chain, const Rational& x) {
    int variations = 0;
    int last = 0;
    for (const Polynomial& p : chain.seq) {
        int s = sign(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

// Number of distinct real roots in (a, b]. Requires a < b; exact provided
// p(a) != 0 (skipped zeros make the variation count right-continuous, so a
// root at b is included and a root at a excluded).
inline int count_real_roots(const SturmChain& chain, const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::invalid_argument("interval must satisfy a < b");
    return sign_variations(chain, a) - sign_variations(chain, b);
}

// 1 + max |c_i / c_d|; every real root lies strictly inside (-bound, bound).
inline Rational cauchy_root_bound(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no root bound");
    Rational m(0);
    for (int j = 0; j < p.degree(); ++j) m = std::max(m, abs(p.coeff(j) / p.leading()));
    return m + 1;
}

// Half-open interval (lo, hi].
struct Interval {
    Rational lo;
    Rational hi;
};

// Disjoint intervals, each containing exactly one real root of p, each of
// width < width. Requires p squarefree; deflate by gcd(p, p') first.
inline std::vector<Interval> isolate_roots(const Polynomial& p, const Rational& width) {
    if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
    if (width <= 0) throw std::invalid_argument("isolation width must be positive");
    if (p.degree() >= 1 && gcd(p, derivative(p)).degree() > 0)
        throw std::invalid_argument("deflate first");
    std::vector<Interval> out;
    if (p.degree() < 1) return out;
    SturmChain chain = sturm_chain(p);
    Rational bound = cauchy_root_bound(p);
    std::vector<Interval> work{{-bound, bound}};
    while (!work.empty()) {
        Interval iv = work.back();
        work.pop_back();
        int c = count_real_roots(chain, iv.lo, iv.hi);
        if (c == 0) continue;
        if (c == 1 && iv.hi - iv.lo < width) {
            out.push_back(iv);
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / 2;
        work.push_back({mid, iv.hi});
        work.push_back({iv.lo, mid});
    }
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return out;
}

}  // namespace bzt
