#pragma once

// Seeded random instance families for the verification commands and the
// property suites. All sampling goes through Rng so a seed pins the exact
// instance stream on every platform (mt19937_64 output is specified by the
// standard; no std distribution is used).

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bzt/divided_differences.hpp"
#include "bzt/polynomial.hpp"

namespace bzt {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform-ish over [lo, hi]; modulo bias is irrelevant here.
    long range(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("empty range");
        return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return (gen_() & 1u) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(range(0, static_cast<long>(i - 1)));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::mt19937_64 gen_;
};

inline Rational random_rational(Rng& rng) { return make_rational(rng.range(-9, 9), rng.range(1, 3)); }

inline Rational random_nonzero_rational(Rng& rng) {
    while (true) {
        Rational r = random_rational(rng);
        if (r != 0) return r;
    }
}

inline std::vector<Rational> distinct_rationals(Rng& rng, int count) {
    std::set<Rational> seen;
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < count) {
        Rational r = make_rational(rng.range(-12, 12), rng.range(1, 3));
        if (seen.insert(r).second) out.push_back(r);
    }
    return out;
}

// Random polynomial of exactly the given degree (nonzero leading coefficient).
inline Polynomial random_polynomial(Rng& rng, int degree) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
    for (int j = 0; j < degree; ++j) coeffs[static_cast<std::size_t>(j)] = random_rational(rng);
    coeffs[static_cast<std::size_t>(degree)] = random_nonzero_rational(rng);
    return Polynomial(std::move(coeffs));
}

// P in root form plus a companion Q with deg Q <= deg P.
struct PQInstance {
    RootForm p;
    Polynomial q;
};

// P with n distinct roots, Q random of degree <= n.
inline PQInstance distinct_roots_instance(Rng& rng, int n) {
    PQInstance inst;
    inst.p.leading = random_nonzero_rational(rng);
    inst.p.roots = distinct_rationals(rng, n);
    inst.q = random_polynomial(rng, static_cast<int>(rng.range(0, n)));
    return inst;
}

// P with n distinct roots; Q shares 1-2 of them.
inline PQInstance shared_roots_instance(Rng& rng, int n) {
    if (n < 2) throw std::invalid_argument("shared-roots family needs n >= 2");
    PQInstance inst;
    inst.p.leading = random_nonzero_rational(rng);
    inst.p.roots = distinct_rationals(rng, n);
    int shared = static_cast<int>(rng.range(1, 2));
    RootForm qf;
    qf.leading = random_nonzero_rational(rng);
    for (int i = 0; i < shared; ++i) qf.roots.push_back(inst.p.roots[static_cast<std::size_t>(i)]);
    Polynomial cof = random_polynomial(rng, static_cast<int>(rng.range(0, n - shared)));
    inst.q = expand(qf) * cof;
    return inst;
}

// P with root multiplicities up to max_mult (total n), listed in shuffled
// order; Q random of degree <= n.
inline PQInstance multiple_roots_instance(Rng& rng, int n, int max_mult = 3) {
    PQInstance inst;
    inst.p.leading = random_nonzero_rational(rng);
    std::vector<int> parts;
    int left = n;
    bool forced = false;
    while (left > 0) {
        int cap = std::min(max_mult, left);
        int m = static_cast<int>(rng.range(1, cap));
        if (!forced && cap >= 2 && m == 1) m = 2;  // guarantee at least one repeated root
        forced = forced || m >= 2;
        parts.push_back(m);
        left -= m;
    }
    std::vector<Rational> bases = distinct_rationals(rng, static_cast<int>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int r = 0; r < parts[i]; ++r) inst.p.roots.push_back(bases[i]);
    rng.shuffle(inst.p.roots);
    inst.q = random_polynomial(rng, static_cast<int>(rng.range(0, n)));
    return inst;
}

// P = G*A and Q = lead * G*B with pairwise disjoint root pools, so that
// gcd(P, Q) has degree exactly gcd_degree.
struct PlantedGcdInstance {
    Polynomial p;
    Polynomial q;
    int gcd_degree;
};

inline PlantedGcdInstance planted_gcd_instance(Rng& rng, int n, int gcd_degree) {
    if (gcd_degree < 0 || gcd_degree >= n) throw std::invalid_argument("gcd degree must lie in [0, n)");
    PlantedGcdInstance inst;
    inst.gcd_degree = gcd_degree;
    int deg_a = n - gcd_degree;
    int deg_b = static_cast<int>(rng.range(0, deg_a - 1));
    std::vector<Rational> pool = distinct_rationals(rng, gcd_degree + deg_a + deg_b);
    auto take = [&pool](int count) {
        std::vector<Rational> out(pool.end() - count, pool.end());
        pool.resize(pool.size() - static_cast<std::size_t>(count));
        return out;
    };
    RootForm g{Rational(1), take(gcd_degree)};
    RootForm a{random_nonzero_rational(rng), take(deg_a)};
    RootForm b{random_nonzero_rational(rng), take(deg_b)};
    Polynomial gp = expand(g);
    inst.p = gp * expand(a);
    inst.q = gp * expand(b);
    return inst;
}

// Sorted distinct nodes plus a Q of degree n-1 whose roots strictly
// interlace them.
struct InterlacingInstance {
    NodeSequence nodes;
    Polynomial q;
};

inline InterlacingInstance interlacing_instance(Rng& rng, int n) {
    if (n < 2) throw std::invalid_argument("interlacing family needs n >= 2");
    InterlacingInstance inst;
    inst.nodes = distinct_rationals(rng, n);
    std::sort(inst.nodes.begin(), inst.nodes.end());
    RootForm qf;
    qf.leading = random_nonzero_rational(rng);
    static const Rational fractions[] = {make_rational(1, 4), make_rational(1, 3), make_rational(1, 2),
                                         make_rational(2, 3), make_rational(3, 4)};
    for (int i = 0; i + 1 < n; ++i) {
        const Rational& t = fractions[rng.range(0, 4)];
        qf.roots.push_back(inst.nodes[static_cast<std::size_t>(i)] +
                           t * (inst.nodes[static_cast<std::size_t>(i + 1)] - inst.nodes[static_cast<std::size_t>(i)]));
    }
    inst.q = expand(qf);
    return inst;
}

}  // namespace bzt
