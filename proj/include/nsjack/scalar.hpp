#ifndef NSJACK_SCALAR_HPP
#define NSJACK_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace nsjack {

// All coefficients, eigenvalues, and norms are exact rationals.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// A formula divided by zero because of a parameter choice (e.g. a negative
// rational k producing colliding eigenvalues). User-visible condition.
class singular_parameter : public std::runtime_error {
public:
    explicit singular_parameter(const std::string& what)
        : std::runtime_error("singular parameter: " + what) {}
};

// A mathematical guarantee failed (non-divisibility where divisibility is a
// theorem, mismatched cross-checks). Always a bug, never a user error.
class invariant_violation : public std::logic_error {
public:
    explicit invariant_violation(const std::string& what)
        : std::logic_error("invariant violation: " + what) {}
};

// Malformed input from the caller or the command line.
class user_error : public std::invalid_argument {
public:
    explicit user_error(const std::string& what)
        : std::invalid_argument(what) {}
};

inline std::string to_string(const Rational& q) {
    return q.str();
}

// Accepts "a", "-a", "a/b".
inline Rational parse_rational(const std::string& s) {
    try {
        Rational q(s);
        if (denominator(q) < 0) q = Rational(-numerator(q), -denominator(q));
        return q;
    } catch (const std::exception&) {
        throw user_error("cannot parse rational: '" + s + "'");
    }
}

inline Rational factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

inline Rational pow_rational(const Rational& base, int e) {
    if (e < 0) {
        if (base == 0) throw singular_parameter("0 raised to a negative power");
        return 1 / pow_rational(base, -e);
    }
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace nsjack

#endif
