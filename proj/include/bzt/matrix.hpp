#pragma once

// Dense square matrices over the rationals with exact determinants, rank,
// and trailing principal minors (lower-right corner submatrices).

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bzt/rational.hpp"

namespace bzt {

class RationalMatrix {
  public:
    explicit RationalMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rational(0)) {
        if (n < 0) throw std::invalid_argument("matrix dimension must be nonnegative");
    }

    static RationalMatrix identity(int n) {
        RationalMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int size() const { return n_; }

    Rational& at(int i, int j) { return entries_[index(i, j)]; }
    const Rational& at(int i, int j) const { return entries_[index(i, j)]; }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch in matrix product");
        RationalMatrix c(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const Rational& aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < a.n_; ++j) c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }

    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch in matrix difference");
        RationalMatrix c(a.n_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) c.entries_[i] = a.entries_[i] - b.entries_[i];
        return c;
    }

  private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("matrix index");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    int n_;
    std::vector<Rational> entries_;
};

// values[s-1] is the determinant of the lower-right s-by-s submatrix.
struct MinorSequence {
    std::vector<Rational> values;

    int size() const { return static_cast<int>(values.size()); }

    const Rational& at_size(int s) const {
        if (s < 1 || s > size()) throw std::out_of_range("minor size");
        return values[static_cast<std::size_t>(s - 1)];
    }
};

// Lower-right s-by-s corner of m.
inline RationalMatrix trailing_submatrix(const RationalMatrix& m, int s) {
    if (s < 0 || s > m.size()) throw std::out_of_range("submatrix size");
    RationalMatrix sub(s);
    int off = m.size() - s;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) sub.at(i, j) = m.at(off + i, off + j);
    return sub;
}

// Exact determinant: rows are scaled to integers, then eliminated with the
// fraction-free Bareiss scheme (all intermediate values stay integral).
inline Rational det(const RationalMatrix& m) {
    int n = m.size();
    if (n == 0) return Rational(1);
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n)));
    Int denom_product = 1;
    for (int i = 0; i < n; ++i) {
        Int scale = 1;
        for (int j = 0; j < n; ++j) scale = lcm(scale, denominator(m.at(i, j)));
        for (int j = 0; j < n; ++j) {
            Rational v = m.at(i, j) * Rational(scale);
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = numerator(v);
        }
        denom_product *= scale;
    }
    int sgn = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return Rational(0);
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(pivot)]);
            sgn = -sgn;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    Int d = a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    if (sgn < 0) d = -d;
    return make_rational(d, denom_product);
}

// Determinants of all lower-right corners, sizes 1..n, each computed
// independently.
inline MinorSequence trailing_minors(const RationalMatrix& m) {
    MinorSequence seq;
    seq.values.reserve(static_cast<std::size_t>(m.size()));
    for (int s = 1; s <= m.size(); ++s) seq.values.push_back(det(trailing_submatrix(m, s)));
    return seq;
}

// Exact rank by Gaussian elimination over the rationals.
inline int rank(const RationalMatrix& m) {
    int n = m.size();
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
    int r = 0;
    for (int col = 0; col < n && r < n; ++col) {
        int pivot = -1;
        for (int i = r; i < n; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(pivot)]);
        for (int i = r + 1; i < n; ++i) {
            Rational f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] / a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j < n; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        ++r;
    }
    return r;
}

inline std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
    for (int i = 0; i < m.size(); ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (int j = 0; j < m.size(); ++j) os << (j ? ", " : " ") << to_string(m.at(i, j));
        os << " ]" << (i + 1 == m.size() ? "]" : "\n");
    }
    return os;
}

}  // namespace bzt
