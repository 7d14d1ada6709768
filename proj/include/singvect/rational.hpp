#ifndef SINGVECT_RATIONAL_HPP
#define SINGVECT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace singvect {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps the canonical form we need:
// gcd(num, den) = 1 and den > 0.
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Rational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

// Accepts "p", "-p", "p/q".
inline std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer p(text.substr(0, slash));
        Integer q(text.substr(slash + 1));
        if (q == 0) return std::nullopt;
        return Rational(p, q);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// gcd of two rationals: gcd of numerators over lcm of denominators, so that
// content extraction produces integral primitive parts.
inline Rational rational_gcd(const Rational& x, const Rational& y) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    if (x == 0) return y < 0 ? Rational(-y) : y;
    if (y == 0) return x < 0 ? Rational(-x) : x;
    return Rational(gcd(num(x), num(y)), lcm(den(x), den(y)));
}

inline bool is_integer(const Rational& q) { return den(q) == 1; }

// Floor square root test for exact rational square roots.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    using boost::multiprecision::sqrt;
    Integer n = sqrt(num(q)), d = sqrt(den(q));
    if (n * n != num(q) || d * d != den(q)) return std::nullopt;
    return Rational(n, d);
}

}  // namespace singvect

#endif
