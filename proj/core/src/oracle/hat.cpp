#include "newton_mellin/oracle/hat.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "newton_mellin/error.hpp"
#include "newton_mellin/fourier.hpp"
#include "newton_mellin/oracle/special.hpp"
#include "quadrature.hpp"

namespace nm::oracle {

Complex numeric_hat_leading(const Expansion& e, double sigma_modulus, double sigma_phase, const Cutoff& cutoff) {
    cutoff.validate();
    if (e.side() != Side::AtZero || e.size() != 1) throw DomainError("numeric_hat_leading: need a single zero-side term");
    if (!(sigma_modulus >= 50.0)) throw DomainError("numeric_hat_leading: |sigma| must be at least 50");
    const auto& [exponent, poly] = *e.terms().begin();
    const auto n64 = exponent.m1 - exponent.m2;
    if (std::abs(n64) > 1) throw DomainError("numeric_hat_leading: Bessel kernel only for |m' - m''| <= 1");
    const int n = static_cast<int>(n64);
    const double mu = 2.0 * exponent.r.to_double() + static_cast<double>(exponent.m1 + exponent.m2) + 1.0;

    // x = 2 |sigma| rho
    const double scale = 2.0 * sigma_modulus;
    const auto integrand = [&](double x) {
        const double rho = x / scale;
        return std::pow(rho, mu) * poly(std::log(rho)) * bessel_j(n, x) * cutoff(rho);
    };
    const double plateau_end = scale * cutoff.inner;
    Complex radial = detail::integrate_endpoint(integrand, 0.0, 1.0) +
                     detail::integrate_panels(integrand, 1.0, plateau_end, std::numbers::pi) +
                     detail::integrate_panels(integrand, plateau_end, scale * cutoff.outer, std::numbers::pi);
    radial /= scale;
    return 2.0 * std::polar(1.0, -n * sigma_phase) * radial;
}

Complex predicted_hat_leading(const Expansion& e, double sigma_modulus, double sigma_phase) {
    return evaluate(fourier::forward(e), std::polar(1.0 / sigma_modulus, -sigma_phase));
}

}  // namespace nm::oracle
