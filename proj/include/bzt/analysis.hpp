#pragma once

// Executable forms of the minor identities and the interlacing criterion:
//   * closed-form trailing minors of B(P,Q) from the roots of P,
//   * per-size comparison of B(P,Q) minors against scaled Delta(Q) minors,
//   * sign-pattern classification of a minor sequence,
//   * the interlacing verdict with an independent Sturm confirmation,
//   * the defect / gcd-degree comparison.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bzt/bezout.hpp"
#include "bzt/matrix.hpp"
#include "bzt/newton.hpp"
#include "bzt/polynomial.hpp"
#include "bzt/sturm.hpp"

namespace bzt {

enum class Pattern { AllPositive, Alternating, Degenerate, Other };

inline const char* to_string(Pattern p) {
    switch (p) {
        case Pattern::AllPositive: return "AllPositive";
        case Pattern::Alternating: return "Alternating";
        case Pattern::Degenerate: return "Degenerate";
        case Pattern::Other: return "Other";
    }
    return "Other";
}

struct SignPattern {
    Pattern classification;
    MinorSequence minors;
};

// Scanned by increasing size. Alternating means the strict sign pattern
// sign(m_s) = (-1)^s (size-1 minor negative), which is exactly the pattern
// of a negative definite matrix; a sequence that flips signs but starts
// positive is classified Other, since such matrices are indefinite and
// support no root-location conclusion.
inline SignPattern classify_pattern(MinorSequence minors) {
    bool any_zero = false;
    bool all_positive = true;
    bool alternating = true;
    for (int s = 1; s <= minors.size(); ++s) {
        int sg = sign(minors.at_size(s));
        if (sg == 0) any_zero = true;
        if (sg <= 0) all_positive = false;
        if (sg != (s % 2 == 0 ? 1 : -1)) alternating = false;
    }
    Pattern p = Pattern::Other;
    if (any_zero)
        p = Pattern::Degenerate;
    else if (all_positive)
        p = Pattern::AllPositive;
    else if (alternating)
        p = Pattern::Alternating;
    return SignPattern{p, std::move(minors)};
}

// Trailing minor of B(P,Q) of the given size, evaluated directly from the
// roots of P as
//   p_n^(2 size) * sum over ascending subsets {i_1 < ... < i_size} of
//   prod_l Q(x_{i_l}) / P'(x_{i_l}) * prod_{pairs} (x_{j_1} - x_{j_2})^2.
// Defined for simple roots only (P' must not vanish at any root).
inline Rational minor_from_simple_roots(const RootForm& rf, const Polynomial& q, int size) {
    int n = static_cast<int>(rf.roots.size());
    if (n < 1) throw std::invalid_argument("P must have degree at least 1");
    if (size < 1 || size > n) throw std::invalid_argument("minor size out of range");
    if (q.degree() > n) throw std::invalid_argument("degree order violated");
    std::set<Rational> distinct(rf.roots.begin(), rf.roots.end());
    if (static_cast<int>(distinct.size()) != n)
        throw std::invalid_argument("closed-form minors require simple roots");

    Polynomial p = expand(rf);
    Polynomial dp = derivative(p);
    std::vector<Rational> ratio(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        ratio[static_cast<std::size_t>(i)] = q.eval(rf.roots[static_cast<std::size_t>(i)]) / dp.eval(rf.roots[static_cast<std::size_t>(i)]);

    Rational sum(0);
    std::vector<int> subset(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) subset[static_cast<std::size_t>(i)] = i;
    while (true) {
        Rational term(1);
        for (int idx : subset) term *= ratio[static_cast<std::size_t>(idx)];
        for (int u = 0; u < size; ++u)
            for (int v = u + 1; v < size; ++v) {
                Rational diff = rf.roots[static_cast<std::size_t>(subset[static_cast<std::size_t>(u)])] -
                                rf.roots[static_cast<std::size_t>(subset[static_cast<std::size_t>(v)])];
                term *= diff * diff;
            }
        sum += term;
        // next ascending subset
        int pos = size - 1;
        while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
        if (pos < 0) break;
        ++subset[static_cast<std::size_t>(pos)];
        for (int t = pos + 1; t < size; ++t) subset[static_cast<std::size_t>(t)] = subset[static_cast<std::size_t>(t - 1)] + 1;
    }
    return pow_rational(rf.leading, static_cast<unsigned>(2 * size)) * sum;
}

struct MinorCheck {
    int size;
    Rational lhs;  // trailing minor of B(P,Q)
    Rational rhs;  // p_n^size * trailing minor of Delta(Q)
    bool equal;
};

// Compares, for every size s = 1..n, the trailing minor of B(P,Q) against
// p_n^s times the trailing minor of Delta(Q) built at the roots of P in the
// given order. Roots may repeat and may coincide with roots of Q.
inline std::vector<MinorCheck> minor_identity_checks(const RootForm& rf, const Polynomial& q) {
    BezoutInput in(expand(rf), q);
    MinorSequence bm = trailing_minors(bezout_via_product(in));
    MinorSequence dm = trailing_minors(delta_matrix(q, rf.roots).matrix);
    std::vector<MinorCheck> checks;
    checks.reserve(static_cast<std::size_t>(in.n));
    for (int s = 1; s <= in.n; ++s) {
        MinorCheck c;
        c.size = s;
        c.lhs = bm.at_size(s);
        c.rhs = pow_rational(rf.leading, static_cast<unsigned>(s)) * dm.at_size(s);
        c.equal = (c.lhs == c.rhs);
        checks.push_back(std::move(c));
    }
    return checks;
}

struct DefectReport {
    int defect;      // n - rank(B(P,Q))
    int gcd_degree;  // deg gcd(P, Q)
};

inline DefectReport defect_report(const Polynomial& p, const Polynomial& q) {
    BezoutInput in(p, q);
    DefectReport r;
    r.defect = in.n - rank(bezout_via_product(in));
    r.gcd_degree = gcd(p, q).degree();
    return r;
}

enum class Verdict { RealDistinctInterlacing, NoClaim };

inline const char* to_string(Verdict v) {
    return v == Verdict::RealDistinctInterlacing ? "RealDistinctInterlacing" : "NoClaim";
}

struct InterlaceReport {
    SignPattern pattern;
    Verdict verdict = Verdict::NoClaim;
    Polynomial interpolant;
    std::vector<Interval> isolated_roots;
    bool sturm_confirmed = false;
};

namespace detail {

// Independent confirmation that the interpolant has deg-many distinct real
// roots, none equal to a node, with exactly one root strictly between each
// pair of adjacent distinct nodes.
inline bool confirm_interlacing(const Polynomial& interp, const NodeSequence& nodes, const Rational& width,
                                std::vector<Interval>& isolated) {
    std::vector<Rational> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != nodes.size()) return false;

    int d = interp.degree();
    if (d != static_cast<int>(nodes.size()) - 1) return false;
    if (d == 0) return true;  // no roots, nothing to separate

    if (gcd(interp, derivative(interp)).degree() > 0) return false;
    SturmChain chain = sturm_chain(interp);
    Rational bound = cauchy_root_bound(interp);
    if (count_real_roots(chain, -bound, bound) != d) return false;
    for (const Rational& u : sorted)
        if (interp.eval(u) == 0) return false;
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (count_real_roots(chain, sorted[i], sorted[i + 1]) != 1) return false;
    isolated = isolate_roots(interp, width);
    return true;
}

template <typename Source>
InterlaceReport interlace_verdict_impl(const Source& source, const NodeSequence& nodes, const Rational& width) {
    DeltaMatrix delta = delta_matrix(source, nodes);
    InterlaceReport report;
    report.pattern = classify_pattern(trailing_minors(delta.matrix));
    report.interpolant = newton_interp(source, nodes);
    if (report.pattern.classification == Pattern::AllPositive ||
        report.pattern.classification == Pattern::Alternating) {
        report.verdict = Verdict::RealDistinctInterlacing;
        report.sturm_confirmed = confirm_interlacing(report.interpolant, nodes, width, report.isolated_roots);
    }
    return report;
}

}  // namespace detail

inline Rational default_isolation_width() { return make_rational(1, Int(4294967296ULL)); }

// Builds Delta, classifies its trailing minors, and, when the pattern
// qualifies, claims real/distinct/interlacing roots and verifies the claim
// with the Sturm machinery.
inline InterlaceReport interlace_verdict(const Polynomial& q, const NodeSequence& nodes,
                                         const Rational& width = default_isolation_width()) {
    return detail::interlace_verdict_impl(q, nodes, width);
}

inline InterlaceReport interlace_verdict(const HermiteData& data, const NodeSequence& nodes,
                                         const Rational& width = default_isolation_width()) {
    return detail::interlace_verdict_impl(data, nodes, width);
}

}  // namespace bzt
