#pragma once

// The anti-triangular matrix of generalized divided differences and the
// Newton-Hermite interpolation polynomial read off its bottom row.
//
// For n nodes, entry (i,j) (1-based) is g[x_{n-i+1},...,x_j] when
// i + j >= n + 1 and exactly zero above that anti-diagonal. The bottom row
// therefore carries g[x_1], g[x_1,x_2], ..., g[x_1,...,x_n], the Newton
// coefficients of the interpolant.

#include <utility>

#include "bzt/divided_differences.hpp"
#include "bzt/matrix.hpp"

namespace bzt {

struct DeltaMatrix {
    RationalMatrix matrix;

    int size() const { return matrix.size(); }
};

namespace detail {

inline DeltaMatrix delta_from_table(const DivDiffTable& table) {
    int n = table.size();
    RationalMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i + j >= n + 1) m.at(i - 1, j - 1) = table.entry(n - i, j - 1);
    return DeltaMatrix{std::move(m)};
}

inline Polynomial interp_from_table(const DivDiffTable& table, const NodeSequence& nodes) {
    Polynomial acc;
    Polynomial basis = Polynomial::constant(Rational(1));
    for (int j = 0; j < table.size(); ++j) {
        acc = acc + table.entry(0, j) * basis;
        basis = basis * Polynomial({-nodes[static_cast<std::size_t>(j)], Rational(1)});
    }
    return acc;
}

}  // namespace detail

inline DeltaMatrix delta_matrix(const Polynomial& q, const NodeSequence& nodes) {
    return detail::delta_from_table(DivDiffTable(q, nodes));
}

inline DeltaMatrix delta_matrix(const HermiteData& data, const NodeSequence& nodes) {
    return detail::delta_from_table(DivDiffTable(data, nodes));
}

// Expanded to the monomial basis; degree <= n-1.
inline Polynomial newton_interp(const Polynomial& q, const NodeSequence& nodes) {
    return detail::interp_from_table(DivDiffTable(q, nodes), nodes);
}

inline Polynomial newton_interp(const HermiteData& data, const NodeSequence& nodes) {
    return detail::interp_from_table(DivDiffTable(data, nodes), nodes);
}

}  // namespace bzt
