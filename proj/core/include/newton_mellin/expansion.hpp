/*
 * Finite log-power expansions
 *
 *   T(t) = sum  P_e(log|t|) * |t|^{2r} t^{m'} conj(t)^{m''}
 *
 * over canonical exponents e = (r, m', m'') with r rational in (-1, 0] and
 * P_e a polynomial in u = log|t| with complex coefficients. An expansion is
 * tagged with the side it lives on: near s = 0 (distributions modulo smooth
 * functions) or near sigma = infinity in the variable tau = 1/sigma
 * (moderate functions modulo flat functions).
 *
 * Exponents are exact; coefficients are double precision and are pruned
 * after every operation so that floating cancellation cannot leave
 * phantom terms behind.
 */
#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <utility>

#include "newton_mellin/rational.hpp"

namespace nm {

using Complex = std::complex<double>;

/// Coefficients below this fraction of the largest coefficient of the same
/// polynomial (floored at an absolute scale of 1) are dropped.
inline constexpr double kPruneRelative = 1e-12;

/// Polynomial in u = log|t|. The zero polynomial is the empty map.
class LogPolynomial {
public:
    LogPolynomial() = default;
    explicit LogPolynomial(std::map<int, Complex> coefficients);

    static LogPolynomial monomial(Complex coefficient, int degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    Complex coefficient(int k) const;
    Complex leading() const;
    const std::map<int, Complex>& terms() const& noexcept { return coeffs_; }
    std::map<int, Complex> terms() && { return std::move(coeffs_); }

    /// Value at a given u.
    Complex operator()(Complex u) const;

    LogPolynomial& operator+=(const LogPolynomial& rhs);
    LogPolynomial& operator*=(Complex scalar);
    friend LogPolynomial operator+(LogPolynomial lhs, const LogPolynomial& rhs) { return lhs += rhs; }
    friend LogPolynomial operator*(LogPolynomial lhs, Complex scalar) { return lhs *= scalar; }
    friend LogPolynomial operator*(Complex scalar, LogPolynomial rhs) { return rhs *= scalar; }
    friend LogPolynomial operator*(const LogPolynomial& lhs, const LogPolynomial& rhs);

    friend bool operator==(const LogPolynomial&, const LogPolynomial&) = default;

private:
    void prune();

    std::map<int, Complex> coeffs_;
};

enum class Side { AtZero, AtInfinity };

const char* to_string(Side side) noexcept;

/// |t|^{2r} t^{m1} conj(t)^{m2} with r in (-1, 0].
///
/// Ordered lexicographically by the bidegree (r + m1, r + m2), which
/// determines the exponent uniquely.
struct Exponent {
    Rational r;
    std::int64_t m1 = 0;
    std::int64_t m2 = 0;

    /// Validating constructor; throws DomainError unless -1 < r <= 0.
    static Exponent make(const Rational& r, std::int64_t m1, std::int64_t m2);

    Rational x() const { return r + Rational(m1); }
    Rational y() const { return r + Rational(m2); }

    friend bool operator==(const Exponent&, const Exponent&) = default;
    friend std::strong_ordering operator<=>(const Exponent& lhs, const Exponent& rhs);
};

/// Folds |t|^{2 rho} t^a conj(t)^b into canonical form: nu = ceil(rho),
/// r = rho - nu, m1 = a + nu, m2 = b + nu.
Exponent canonicalize(const Rational& rho, std::int64_t a, std::int64_t b);

class Expansion {
public:
    using TermMap = std::map<Exponent, LogPolynomial>;

    explicit Expansion(Side side = Side::AtZero) : side_(side) {}
    Expansion(Side side, TermMap terms);

    Side side() const noexcept { return side_; }
    // By value on temporaries, so `for (x : f().terms())` is safe.
    const TermMap& terms() const& noexcept { return terms_; }
    TermMap terms() && { return std::move(terms_); }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Polynomial at `e`, or the zero polynomial.
    const LogPolynomial& at(const Exponent& e) const;

    /// Adds `poly` to the term at `e`, dropping it if the sum vanishes.
    void add_term(const Exponent& e, const LogPolynomial& poly);

    friend bool operator==(const Expansion&, const Expansion&) = default;

private:
    Side side_;
    TermMap terms_;
};

/// target + scalar * source.
Expansion accumulate(const Expansion& target, Complex scalar, const Expansion& source);

/// Term-by-term product; exponents add and are re-canonicalized.
Expansion multiply(const Expansion& lhs, const Expansion& rhs);

/// Removes the constant-in-u part of every (0, m1 >= 0, m2 >= 0) term,
/// i.e. the smooth monomials s^{m1} conj(s)^{m2}.
Expansion mod_smooth(const Expansion& e);

bool is_fiber_class(const Expansion& e);

/// Pointwise value of the expansion at t != 0.
Complex evaluate(const Expansion& e, Complex t);

/// Same side, same exponent keys, same degrees, coefficients within
/// `rel_tol` relative to the larger modulus.
bool approx_equal(const Expansion& lhs, const Expansion& rhs, double rel_tol = 1e-9);

}  // namespace nm
