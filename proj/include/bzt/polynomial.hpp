#pragma once

// Exact univariate polynomials over the rationals, stored in the monomial
// basis with ascending coefficients (coeffs[j] is the coefficient of x^j).
// The zero polynomial is the empty coefficient vector and reports degree -1.

#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bzt/rational.hpp"

namespace bzt {

class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    static Polynomial constant(const Rational& c) { return Polynomial({c}); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Coefficient of x^j; zero outside the stored range.
    Rational coeff(int j) const {
        if (j < 0 || j >= static_cast<int>(coeffs_.size())) return Rational(0);
        return coeffs_[static_cast<std::size_t>(j)];
    }

    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    // Exact Horner evaluation.
    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    Rational operator()(const Rational& x) const { return eval(x); }

    Polynomial operator-() const {
        std::vector<Rational> r(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = -coeffs_[i];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        if (s == 0) return Polynomial();
        std::vector<Rational> r(p.coeffs_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = s * p.coeffs_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& p, const Rational& s) { return s * p; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline Polynomial derivative(const Polynomial& p) {
    if (p.degree() < 1) return Polynomial();
    std::vector<Rational> r(static_cast<std::size_t>(p.degree()));
    for (int j = 1; j <= p.degree(); ++j) r[static_cast<std::size_t>(j - 1)] = Rational(j) * p.coeff(j);
    return Polynomial(std::move(r));
}

inline Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return (Rational(1) / p.leading()) * p;
}

// Exact deflation (p(x) - p(a)) / (x - a) by synthetic division; the division
// is always exact, whatever a is.
inline Polynomial divide_linear(const Polynomial& p, const Rational& a) {
    if (p.degree() < 1) return Polynomial();
    std::vector<Rational> q(static_cast<std::size_t>(p.degree()), Rational(0));
    Rational carry = p.coeff(p.degree());
    for (int j = p.degree() - 1; j >= 0; --j) {
        q[static_cast<std::size_t>(j)] = carry;
        carry = p.coeff(j) + a * carry;
    }
    return Polynomial(std::move(q));
}

// Euclidean division over the rationals: a = q*b + r with deg r < deg b.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rational> quot;
    int db = b.degree();
    if (a.degree() >= db) quot.assign(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    int dr = a.degree();
    while (dr >= db) {
        Rational t = rem[static_cast<std::size_t>(dr)] / b.leading();
        quot[static_cast<std::size_t>(dr - db)] = t;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(dr - db + j)] -= t * b.coeff(j);
        while (dr >= 0 && rem[static_cast<std::size_t>(dr)] == 0) --dr;
    }
    rem.resize(static_cast<std::size_t>(dr + 1));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

inline Polynomial rem(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

// Monic greatest common divisor via the Euclidean remainder sequence.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("undefined gcd");
    Polynomial u = a, v = b;
    while (!v.is_zero()) {
        Polynomial r = rem(u, v);
        u = v;
        v = r;
    }
    return (Rational(1) / u.leading()) * u;
}

// P(x) = leading * (x - roots[0]) * ... * (x - roots[n-1]).
struct RootForm {
    Rational leading;
    std::vector<Rational> roots;
};

inline Polynomial expand(const RootForm& rf) {
    Polynomial p = Polynomial::constant(rf.leading);
    for (const Rational& r : rf.roots) p = p * Polynomial({-r, Rational(1)});
    return p;
}

inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int j = p.degree(); j >= 0; --j) {
        Rational c = p.coeff(j);
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        Rational a = abs(c);
        bool unit = (a == 1);
        if (!unit || j == 0) out += to_string(a);
        if (j > 0) {
            if (!unit) out += "*";
            out += "x";
            if (j > 1) out += "^" + std::to_string(j);
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace bzt
