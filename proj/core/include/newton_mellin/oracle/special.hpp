#pragma once

#include <complex>

namespace nm::oracle {

/// Gamma function on the complex plane. Lanczos approximation (g = 7,
/// nine terms) for Re z >= 1/2 and the reflection formula below. Relative
/// error stays under 1e-10 for |z| <= 20. Throws DomainError at the poles
/// z = 0, -1, -2, ...
std::complex<double> gamma(std::complex<double> z);

/// Bessel function of the first kind J_n(x) for n in {-1, 0, 1}, x >= 0.
/// Power series for x <= 12, Hankel asymptotic expansion beyond; absolute
/// error under 1e-10. J_{-1} = -J_1.
double bessel_j(int n, double x);

}  // namespace nm::oracle
