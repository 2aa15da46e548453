#pragma once

// Exact scalar layer: arbitrary-precision integers and canonical rationals.
// Every number in the library is one of these two types; no floating point
// enters any computation (doubles appear only in display helpers).

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

namespace bzt {

namespace mp = boost::multiprecision;

using Int = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

// num/den with any sign of den; den must be nonzero.
inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline int sign(const Rational& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

inline Int pow_int(const Int& base, unsigned exp) {
    Int r = 1;
    Int b = base;
    while (exp > 0) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

inline Rational pow_rational(const Rational& base, unsigned exp) {
    return make_rational(pow_int(numerator(base), exp), pow_int(denominator(base), exp));
}

// Strict input grammar: '-'? digits ('/' digits)? with a positive denominator.
// Anything else (signs on the denominator, whitespace, empty fields) is rejected.
inline Rational parse_rational(const std::string& text) {
    const auto fail = [&text]() -> Rational {
        throw std::invalid_argument("malformed rational '" + text + "'");
    };
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-') ++pos;
    std::size_t num_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_begin) return fail();
    Int num(text.substr(0, pos));
    if (pos == text.size()) return Rational(num);
    if (text[pos] != '/') return fail();
    ++pos;
    std::size_t den_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin || pos != text.size()) return fail();
    Int den(text.substr(den_begin));
    if (den == 0) return fail();
    return make_rational(num, den);
}

// Canonical form: "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

// Display only; never used in comparisons.
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace bzt
