#include "newton_mellin/oracle/laurent.hpp"

#include <cmath>
#include <numbers>

#include "newton_mellin/error.hpp"
#include "quadrature.hpp"

namespace nm::oracle {
namespace {

constexpr double kRadialTolerance = 1e-11;

// M_l(s) = int_0^inf rho^s (log rho)^l cutoff(rho) d rho for l = 0..degree,
// continued through  M_l(s) = -(l M_{l-1}(s) + K_l(s)) / (s + 1),
// K_l(s) = int rho^{s+1} (log rho)^l cutoff'(rho) d rho.
std::vector<Complex> radial_moments(Complex s, int degree, const Cutoff& cutoff) {
    std::vector<Complex> moments(static_cast<std::size_t>(degree) + 1);
    for (int ell = 0; ell <= degree; ++ell) {
        const auto boundary = [&](double rho) {
            return std::pow(Complex{rho, 0.0}, s + 1.0) * std::pow(std::log(rho), ell) * cutoff.derivative(rho);
        };
        const Complex k = detail::integrate_smooth(boundary, cutoff.inner, cutoff.outer, kRadialTolerance);
        const Complex lower = ell == 0 ? Complex{} : static_cast<double>(ell) * moments[ell - 1];
        moments[ell] = -(lower + k) / (s + 1.0);
    }
    return moments;
}

}  // namespace

Complex predicted_pole(const Exponent& term, std::int64_t k1, std::int64_t k2) {
    (void)k2;
    const double nu = static_cast<double>(k1 - term.m1);
    return {nu - term.r.to_double() - 1.0, 0.0};
}

LaurentProbe default_probe(const Exponent& term, std::int64_t k1, std::int64_t k2) {
    return LaurentProbe{predicted_pole(term, k1, k2)};
}

std::vector<Complex> numeric_mellin_laurent(const Exponent& term, const LogPolynomial& log_coeffs, std::int64_t k1,
                                            std::int64_t k2, const LaurentProbe& probe, const Cutoff& cutoff) {
    cutoff.validate();
    const int degree = std::max(log_coeffs.degree(), 0);
    std::vector<Complex> out(static_cast<std::size_t>(degree) + 2);
    if (k1 - term.m1 != k2 - term.m2) return out;

    if (probe.nodes < 8) throw DomainError("numeric_mellin_laurent: probe needs at least 8 nodes");
    if (!(probe.radius > 0.0)) throw DomainError("numeric_mellin_laurent: probe radius must be positive");
    const Complex pole = predicted_pole(term, k1, k2);
    if (std::abs(probe.center - pole) > 1e-12) throw DomainError("numeric_mellin_laurent: probe not centred on the pole");
    // Other terms of an expansion put poles on the lattice lambda_o + Z/2 at the
    // closest; 2 * radius must stay below that spacing.
    if (probe.radius >= 0.25) throw DomainError("numeric_mellin_laurent: probe radius encloses a second pole");

    const double nu = static_cast<double>(k1 - term.m1);
    const double r = term.r.to_double();
    for (int j = 0; j < probe.nodes; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / probe.nodes;
        const Complex offset = std::polar(probe.radius, theta);
        const Complex lambda = probe.center + offset;
        const Complex s = 2.0 * (lambda + r - nu) + 1.0;
        const auto moments = radial_moments(s, degree, cutoff);
        Complex value{};
        for (const auto& [ell, w] : log_coeffs.terms()) value += w * 2.0 * moments[ell];
        Complex weight = offset;
        for (auto& coefficient : out) {
            coefficient += value * weight / static_cast<double>(probe.nodes);
            weight *= offset;
        }
    }
    return out;
}

}  // namespace nm::oracle
