#pragma once

#include <complex>

namespace nm::oracle {

/// Numerical check of
///   int_0^inf r^{2l+1} J_0(r) dr   = 2^{2l+1} Gamma(l+1) / Gamma(-l),   Re(l+1) in (0, 1/4)
///   int_0^inf r^{2(l+1)} J_1(r) dr = 2^{2(l+1)} Gamma(l+2) / Gamma(-l), Re(l+1) in (-1, -1/4)
struct BesselMellinOptions {
    /// Finite quadrature runs over [0, truncation]; the oscillatory tail
    /// beyond is integrated from the Hankel expansion of J_n by repeated
    /// integration by parts.
    double truncation = 200.0;
};

struct BesselMellinResult {
    std::complex<double> numeric;
    std::complex<double> closed;
    double relative_deviation = 0.0;
};

bool in_bessel_mellin_strip(std::complex<double> lambda, int n);

std::complex<double> bessel_mellin_closed_form(std::complex<double> lambda, int n);

/// Throws DomainError when lambda is outside the strip for n.
BesselMellinResult bessel_mellin_check(std::complex<double> lambda, int n, const BesselMellinOptions& options = {});

}  // namespace nm::oracle
