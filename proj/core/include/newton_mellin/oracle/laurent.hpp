#pragma once

#include <cstdint>
#include <vector>

#include "newton_mellin/expansion.hpp"
#include "newton_mellin/oracle/cutoff.hpp"

namespace nm::oracle {

/// Circle in the lambda plane used to extract Laurent coefficients.
struct LaurentProbe {
    Complex center;
    double radius = 0.1;
    int nodes = 64;
};

/// Pole of the Mellin integral of |t|^{2r} t^{m'} conj(t)^{m''} against
/// t^{-k'} conj(t)^{-k''}: lambda_o = nu - r - 1 with nu = k' - m'.
Complex predicted_pole(const Exponent& term, std::int64_t k1, std::int64_t k2);

/// Laurent coefficients P^k, k = 0 .. deg+1, of
///   I(lambda) = (1/pi) int T(t) |t|^{2 lambda} t^{-k'} conj(t)^{-k''} cutoff(|t|) dA
/// for T = |t|^{2r} t^{m'} conj(t)^{m''} P(log|t|), where P^k multiplies
/// (lambda - lambda_o)^{-(k+1)}. The angular integral leaves
/// 2 int rho^{s} (log rho)^l cutoff(rho) d rho with s = 2(lambda + r - nu) + 1;
/// that radial integral is continued past its abscissa by integration by
/// parts against cutoff', which only involves the transition annulus.
/// The coefficients come from a trapezoid rule on the probe circle.
///
/// Returns zeros when k' - m' != k'' - m'' (angular integral vanishes).
/// Throws DomainError when the probe is not centred on the predicted pole
/// or its radius reaches the next candidate pole (1/2 away), and
/// ConvergenceError when a radial quadrature fails.
std::vector<Complex> numeric_mellin_laurent(const Exponent& term, const LogPolynomial& log_coeffs, std::int64_t k1,
                                            std::int64_t k2, const LaurentProbe& probe, const Cutoff& cutoff = {});

/// Probe centred on predicted_pole with default radius and nodes.
LaurentProbe default_probe(const Exponent& term, std::int64_t k1, std::int64_t k2);

}  // namespace nm::oracle
