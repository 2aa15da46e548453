#pragma once

// Generalized divided differences g[x_i,...,x_j] for polynomial data or for
// tabulated Hermite data (value and derivatives per node). Three engines:
//
//   divdiff_poly      exact deflation chain; accepts repeated nodes in any
//                     order and is the production engine,
//   divdiff_recursive the two-branch recursion on first/last nodes, with the
//                     equal-endpoints branch realized by differentiating a
//                     difference that keeps one node symbolic,
//   divdiff_hermite   classical confluent table over grouped nodes seeded
//                     with g^(r)(x)/r!.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bzt/polynomial.hpp"

namespace bzt {

using NodeSequence = std::vector<Rational>;

// True when equal nodes are contiguous.
inline bool nodes_grouped(const NodeSequence& nodes) {
    std::set<Rational> closed;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i > 0 && nodes[i] == nodes[i - 1]) continue;
        if (closed.count(nodes[i]) > 0) return false;
        if (i > 0) closed.insert(nodes[i - 1]);
    }
    return true;
}

// Per-node derivative data: values[r] = g^(r)(node), r = 0..multiplicity-1.
struct HermiteGroup {
    Rational node;
    std::vector<Rational> values;
};

struct HermiteData {
    std::vector<HermiteGroup> groups;

    const HermiteGroup* find(const Rational& node) const {
        for (const auto& g : groups)
            if (g.node == node) return &g;
        return nullptr;
    }

    // g^(order)(node); both the node and the order must be covered.
    const Rational& derivative_value(const Rational& node, int order) const {
        const HermiteGroup* g = find(node);
        if (g == nullptr || order < 0 || order >= static_cast<int>(g->values.size()))
            throw std::invalid_argument("insufficient Hermite data");
        return g->values[static_cast<std::size_t>(order)];
    }

    void validate() const {
        std::set<Rational> seen;
        for (const auto& g : groups) {
            if (g.values.empty()) throw std::invalid_argument("Hermite group without values");
            if (!seen.insert(g.node).second) throw std::invalid_argument("duplicate Hermite group node");
        }
    }
};

// Samples value and derivatives of q at each distinct node, up to the node's
// multiplicity in the sequence.
inline HermiteData hermite_from_polynomial(const Polynomial& q, const NodeSequence& nodes) {
    HermiteData data;
    for (const Rational& x : nodes) {
        int count = static_cast<int>(std::count(nodes.begin(), nodes.end(), x));
        if (data.find(x) != nullptr) continue;
        HermiteGroup g;
        g.node = x;
        Polynomial d = q;
        for (int r = 0; r < count; ++r) {
            g.values.push_back(d.eval(x));
            d = derivative(d);
        }
        data.groups.push_back(std::move(g));
    }
    return data;
}

// Deflation engine: q_{j+1} = (q_j(x) - q_j(x_j)) / (x - x_j), answer
// q_k(x_k). Exact for polynomial data, repeated nodes in any order.
inline Rational divdiff_poly(const Polynomial& q, const NodeSequence& nodes) {
    if (nodes.empty()) throw std::invalid_argument("empty node sequence");
    Polynomial p = q;
    for (std::size_t j = 0; j + 1 < nodes.size(); ++j) p = divide_linear(p, nodes[j]);
    return p.eval(nodes.back());
}

namespace detail {

inline Rational divdiff_recursive_impl(const Polynomial& q, const NodeSequence& nodes);

// The difference g[x, s_1, ..., s_m] as a polynomial in the symbolic first
// node x: (g[s_1..s_m] - g[x, s_1..s_{m-1}]) / (s_m - x), which is an exact
// polynomial division because the numerator vanishes at x = s_m.
inline Polynomial divdiff_symbolic(const Polynomial& q, const NodeSequence& fixed) {
    if (fixed.empty()) return q;
    NodeSequence shorter(fixed.begin(), fixed.end() - 1);
    Polynomial numer = Polynomial::constant(divdiff_recursive_impl(q, fixed)) - divdiff_symbolic(q, shorter);
    return -divide_linear(numer, fixed.back());
}

inline Rational divdiff_recursive_impl(const Polynomial& q, const NodeSequence& nodes) {
    std::size_t k = nodes.size();
    if (k == 1) return q.eval(nodes.front());
    if (nodes.front() != nodes.back()) {
        NodeSequence tail(nodes.begin() + 1, nodes.end());
        NodeSequence head(nodes.begin(), nodes.end() - 1);
        return (divdiff_recursive_impl(q, tail) - divdiff_recursive_impl(q, head)) / (nodes.back() - nodes.front());
    }
    NodeSequence middle(nodes.begin() + 1, nodes.end() - 1);
    return derivative(divdiff_symbolic(q, middle)).eval(nodes.front());
}

}  // namespace detail

// Literal two-branch recursion on the first and last node.
inline Rational divdiff_recursive(const Polynomial& q, const NodeSequence& nodes) {
    if (nodes.empty()) throw std::invalid_argument("empty node sequence");
    return detail::divdiff_recursive_impl(q, nodes);
}

// Upper-triangular table of divided differences over consecutive node runs:
// entry(a, b) = g[x_a, ..., x_b] for 0 <= a <= b < n.
class DivDiffTable {
  public:
    DivDiffTable(const Polynomial& q, const NodeSequence& nodes) : n_(check_size(nodes)), cells_(cell_count()) {
        for (int a = 0; a < n_; ++a) {
            Polynomial p = q;
            for (int b = a; b < n_; ++b) {
                cell(a, b) = p.eval(nodes[static_cast<std::size_t>(b)]);
                p = divide_linear(p, nodes[static_cast<std::size_t>(b)]);
            }
        }
    }

    DivDiffTable(const HermiteData& data, const NodeSequence& nodes) : n_(check_size(nodes)), cells_(cell_count()) {
        if (!nodes_grouped(nodes)) throw std::invalid_argument("nodes must be grouped");
        data.validate();
        for (int len = 1; len <= n_; ++len) {
            for (int a = 0; a + len <= n_; ++a) {
                int b = a + len - 1;
                const Rational& xa = nodes[static_cast<std::size_t>(a)];
                const Rational& xb = nodes[static_cast<std::size_t>(b)];
                if (xa == xb) {
                    int order = b - a;
                    Rational f(1);
                    for (int r = 2; r <= order; ++r) f *= r;
                    cell(a, b) = data.derivative_value(xa, order) / f;
                } else {
                    cell(a, b) = (cell(a + 1, b) - cell(a, b - 1)) / (xb - xa);
                }
            }
        }
    }

    int size() const { return n_; }

    const Rational& entry(int a, int b) const {
        if (a < 0 || b < a || b >= n_) throw std::out_of_range("table index");
        return cells_[offset(a, b)];
    }

  private:
    static int check_size(const NodeSequence& nodes) {
        if (nodes.empty()) throw std::invalid_argument("empty node sequence");
        return static_cast<int>(nodes.size());
    }

    std::size_t cell_count() const { return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ + 1) / 2; }

    // Row-major packing of the upper triangle.
    std::size_t offset(int a, int b) const {
        std::size_t row_start = static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) -
                                static_cast<std::size_t>(a) * static_cast<std::size_t>(a - 1) / 2;
        return row_start + static_cast<std::size_t>(b - a);
    }

    Rational& cell(int a, int b) { return cells_[offset(a, b)]; }

    int n_;
    std::vector<Rational> cells_;
};

// Confluent-table engine over the full node sequence.
inline Rational divdiff_hermite(const HermiteData& data, const NodeSequence& nodes) {
    DivDiffTable table(data, nodes);
    return table.entry(0, table.size() - 1);
}

}  // namespace bzt
