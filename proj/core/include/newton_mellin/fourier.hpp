/*
 * Local Fourier transform (0, infinity) at the level of expansions.
 *
 * The plane transform uses the kernel exp(conj(s sigma) - s sigma) with the
 * volume forms (i/2pi) ds^dsbar and (i/2pi) dsigma^dsigmabar; the inverse
 * uses exp(s sigma - conj(s sigma)). On the infinity side expansions are
 * written in tau = 1/sigma.
 *
 * A term of a fiber-class expansion at (r, m', m'') is sent to (r, m'+1, m''+1):
 *
 *   r != 0:  a u^k        ->  kappa(r, m', m'') a u^k
 *   r == 0:  a u^k, k>=1  ->  (-1)^{m''+1} (k/2) m'! m''! a u^{k-1}
 *
 * Smooth content (r = 0, k = 0) maps to flat content and disappears. The
 * coefficient rules are exact on the dominant monomial of every exponent,
 * which is all the decorated polygons see; sub-dominant log coefficients
 * follow the same rule coefficient by coefficient.
 */
#pragma once

#include <cstdint>

#include "newton_mellin/expansion.hpp"
#include "newton_mellin/newton.hpp"

namespace nm::fourier {

inline constexpr double kDecorationTolerance = 1e-9;

/// Transfer factor for r in (-1, 0), m', m'' >= 0:
///   (-1)^{m''+1} (1/pi) Gamma(r+m'+1) Gamma(r+m''+1) sin(pi r),
/// the value of  Gamma(-l) (-1)^{k'} Gamma(l+1) / (Gamma(l+1-k') Gamma(l+1-k''))
/// at the pole l = nu - r - 1 (k' = m'+nu, k'' = m''+nu), and the leading
/// constant of the transform of |s|^{2r} s^{m'} conj(s)^{m''}.
/// Throws DomainError outside that range.
Complex kappa(const Rational& r, std::int64_t m1, std::int64_t m2);

/// The Gamma-ratio prefactor above, evaluated directly at the pole
/// l = nu - r - 1 for a given nu >= 0. Independent route to kappa.
Complex pole_prefactor(const Rational& r, std::int64_t m1, std::int64_t m2, std::int64_t nu);

/// (-1)^{m''+1} (k/2) m'! m''!: factor sending the u^k coefficient at
/// (0, m', m'') to the u^{k-1} coefficient at (0, m'+1, m''+1).
double integer_transfer(std::int64_t m1, std::int64_t m2, int k);

/// Requires a fiber-class expansion; applies mod_smooth first.
Expansion forward(const Expansion& e);

/// Requires the infinity side with every m', m'' >= 1.
Expansion inverse(const Expansion& e);

/// Polygon over all exponents with a nonzero polynomial, each vertex
/// decorated with the dominant monomial.
DecoratedPolygon tilde_polygon(const Expansion& e);

/// Decorated polygon of a fiber-class expansion modulo smooth functions,
/// with the transfer decoration: kappa(r,m',m'') b u^l at non-integer
/// vertices, (-1)^{m''+1} (l/2) m'! m''! b u^{l-1} at integer ones.
DecoratedPolygon hat_polygon(const Expansion& e);

/// inverse(forward(e1) * forward(e2)).
Expansion thom_sebastiani(const Expansion& e1, const Expansion& e2);

/// tilde_polygon(forward(e)) == hat_polygon(e) + (1,1).
bool prop_nn_check(const Expansion& e, double rel_tol = kDecorationTolerance);

struct TheoremReport {
    DecoratedPolygon lhs;  ///< hat polygon of the combination
    DecoratedPolygon rhs;  ///< hat(e1) + hat(e2) + (1,1)
    bool verdict = false;
    double max_coefficient_deviation = 0.0;
};

TheoremReport theorem_check(const Expansion& e1, const Expansion& e2, double rel_tol = kDecorationTolerance);

}  // namespace nm::fourier
