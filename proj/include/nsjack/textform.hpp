#ifndef NSJACK_TEXTFORM_HPP
#define NSJACK_TEXTFORM_HPP

#include <sstream>

#include "polynomial.hpp"

namespace nsjack {

// Canonical text form: terms in descending grevlex order, coefficient always
// present with '*', exponent 1 written bare, constant term as a bare rational.
// Example: "2*x1 + 1*x2", "1/2*x1^2 - 3*x2*x3".
inline std::string poly_to_text(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& t = f.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        const auto& [mono, c] = *it;
        Rational a = c;
        if (first) {
            first = false;
        } else if (a < 0) {
            os << " - ";
            a = -a;
        } else {
            os << " + ";
        }
        os << to_string(a);
        for (size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            os << "*x" << (i + 1);
            if (mono[i] > 1) os << "^" << mono[i];
        }
    }
    return os.str();
}

} // namespace nsjack

#endif
