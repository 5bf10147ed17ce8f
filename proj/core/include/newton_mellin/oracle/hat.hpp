#pragma once

#include "newton_mellin/expansion.hpp"
#include "newton_mellin/oracle/cutoff.hpp"

namespace nm::oracle {

/// Numerical transform of one model term cut off at the origin:
///   T^(sigma) = (1/pi) int exp(conj(s sigma) - s sigma) T(s) cutoff(|s|) dA(s)
/// with T = |s|^{2r} s^{m'} conj(s)^{m''} P(log|s|). The angular integral
/// reduces to a Bessel kernel,
///   2 e^{-i n phi} int rho^{2r+m'+m''+1} P(log rho) J_n(2 rho |sigma|) cutoff(rho) d rho,
/// n = m' - m'', phi = arg sigma, and the radial integral is done by
/// adaptive quadrature. Requires a single-term zero-side expansion with
/// |m' - m''| <= 1 and |sigma| >= 50; throws DomainError otherwise and
/// ConvergenceError on quadrature failure.
Complex numeric_hat_leading(const Expansion& e, double sigma_modulus, double sigma_phase, const Cutoff& cutoff = {});

/// Leading behaviour predicted by the symbolic forward transform: the
/// infinity-side expansion forward(e) evaluated at tau = 1/sigma.
Complex predicted_hat_leading(const Expansion& e, double sigma_modulus, double sigma_phase);

}  // namespace nm::oracle
