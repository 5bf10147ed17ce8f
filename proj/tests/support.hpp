// Shared helpers for the unit tests.
#pragma once

#include <complex>
#include <initializer_list>
#include <map>
#include <utility>

#include "newton_mellin/expansion.hpp"
#include "newton_mellin/newton.hpp"

namespace nm::test {

inline LogPolynomial poly(std::initializer_list<std::pair<const int, Complex>> coeffs) {
    return LogPolynomial(std::map<int, Complex>(coeffs));
}

struct TermSpec {
    Rational r;
    std::int64_t m1;
    std::int64_t m2;
    LogPolynomial p;
};

inline Expansion expansion(Side side, std::initializer_list<TermSpec> terms) {
    Expansion e(side);
    for (const auto& t : terms) e.add_term(Exponent::make(t.r, t.m1, t.m2), t.p);
    return e;
}

inline Expansion at_zero(std::initializer_list<TermSpec> terms) { return expansion(Side::AtZero, terms); }
inline Expansion at_infinity(std::initializer_list<TermSpec> terms) { return expansion(Side::AtInfinity, terms); }

inline Point pt(Rational x, Rational y) { return {x, y}; }

inline bool close(Complex a, Complex b, double rel = 1e-12) {
    return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace nm::test
