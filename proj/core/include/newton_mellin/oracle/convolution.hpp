#pragma once

#include <vector>

#include "newton_mellin/expansion.hpp"
#include "newton_mellin/oracle/cutoff.hpp"

namespace nm::oracle {

/// One-variable germ x -> x^a.
struct MonomialGerm {
    int exponent = 1;
};

/// Fiber density of x^a with a radial plateau on the target:
///   (1/a) rho^{2/a - 2} cutoff(rho),  rho = |s|.
double fiber_density(const MonomialGerm& germ, double rho, const Cutoff& cutoff = {});

/// Singular part of that density: {canonicalize(1/a - 1, 0, 0): 1/a}
/// modulo smooth functions, empty for a = 1. Throws DomainError for a < 1.
Expansion monomial_expansion(const MonomialGerm& germ);

/// Fiber density of x^a + y^b at each s,
///   T(s) = (1/pi) int T_a(|u|) T_b(|s - u|) dA(u).
/// The integrable singularities at u = 0 and u = s get polar discs of
/// radius |s|/4; the remaining region is integrated in polar coordinates
/// around 0 with the disc around s cut out. Requires a, b in 1..4 and
/// |s| <= 0.2; s = 0 only when one germ is smooth. Throws DomainError
/// otherwise and ConvergenceError on quadrature failure.
std::vector<Complex> ts_convolution(const MonomialGerm& a, const MonomialGerm& b, const std::vector<Complex>& s_values,
                                    const Cutoff& cutoff = {});

/// Least-squares fit of values ~ c0 + c1 log x.
struct LogFit {
    double c0 = 0.0;
    double c1 = 0.0;
};
LogFit fit_log(const std::vector<double>& x, const std::vector<double>& values);

/// values ~ c0 + c x^alpha from three points x, x/2, x/4 via the ratio of
/// successive differences.
struct PowerFit {
    double alpha = 0.0;
    double coefficient = 0.0;
};
PowerFit fit_power(double x, double v_x, double v_half, double v_quarter);

/// Symbolic thom_sebastiani leading term against the convolution fit for
/// x^a + y^b.
struct ConvolutionCheck {
    enum class Kind { Smooth, Logarithmic, Power };
    Kind kind = Kind::Smooth;
    Expansion symbolic;
    /// Log coefficient (Logarithmic) or |s| power 2r (Power); unused for Smooth.
    double predicted_rate = 0.0;
    double fitted_rate = 0.0;
    /// Coefficient of |s|^{2r} (Power only).
    double predicted_coefficient = 0.0;
    double fitted_coefficient = 0.0;
    /// Largest relative deviation among the compared quantities; for Smooth
    /// the relative size of the last difference T(S/4) - T(S/2).
    double deviation = 0.0;
    bool pass = false;
};

/// Sample points |s| = scale, scale/2, scale/4 (log fit uses the same three).
ConvolutionCheck convolution_check(const MonomialGerm& a, const MonomialGerm& b, double tol = 0.05, double scale = 0.1,
                                   const Cutoff& cutoff = {});

const char* to_string(ConvolutionCheck::Kind kind) noexcept;

}  // namespace nm::oracle
