#include "newton_mellin/oracle/bessel_mellin.hpp"

#include <cmath>
#include <numbers>

#include "newton_mellin/error.hpp"
#include "newton_mellin/oracle/special.hpp"
#include "quadrature.hpp"

namespace nm::oracle {
namespace {

using Complex = std::complex<double>;
using std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// int_R^inf r^beta e^{+-ir} dr  ~  e^{+-iR} sum_j (+-i)^{j+1} beta(beta-1)...(beta-j+1) R^{beta-j}
Complex oscillatory_tail(Complex beta, double R, double direction) {
    const Complex unit{0.0, direction};
    Complex falling{1.0, 0.0};
    Complex unit_power = unit;
    Complex sum{};
    double previous = INFINITY;
    for (int j = 0; j < 40; ++j) {
        const Complex term = unit_power * falling * std::pow(Complex{R, 0.0}, beta - static_cast<double>(j));
        if (std::abs(term) > previous) break;
        previous = std::abs(term);
        sum += term;
        if (std::abs(term) < 1e-18) break;
        falling *= beta - static_cast<double>(j);
        unit_power *= unit;
    }
    return std::exp(unit * R) * sum;
}

// int_R^inf r^mu J_n(r) dr from J_n(r) ~ sqrt(2/(pi r)) Re-part of e^{i w} sum_k i^k a_k r^{-k}.
Complex bessel_tail(Complex mu, int n, double R) {
    const double phase0 = (0.5 * n + 0.25) * pi;
    const double four_n2 = 4.0 * n * n;
    Complex sum{};
    double a = 1.0;
    Complex ik{1.0, 0.0};
    for (int k = 0; k < 8; ++k) {
        if (k > 0) {
            const double odd = 2.0 * k - 1.0;
            a *= (four_n2 - odd * odd) / (8.0 * k);
            ik *= kI;
        }
        const Complex beta = mu - 0.5 - static_cast<double>(k);
        sum += a * (ik * std::exp(-kI * phase0) * oscillatory_tail(beta, R, +1.0) +
                    std::conj(ik) * std::exp(kI * phase0) * oscillatory_tail(beta, R, -1.0));
    }
    return std::sqrt(2.0 / pi) * 0.5 * sum;
}

}  // namespace

bool in_bessel_mellin_strip(Complex lambda, int n) {
    const double s = lambda.real() + 1.0;
    if (n == 0) return s > 0.0 && s < 0.25;
    if (n == 1) return s > -1.0 && s < -0.25;
    return false;
}

Complex bessel_mellin_closed_form(Complex lambda, int n) {
    if (n == 0) return std::pow(2.0, 2.0 * lambda + 1.0) * gamma(lambda + 1.0) / gamma(-lambda);
    if (n == 1) return std::pow(2.0, 2.0 * (lambda + 1.0)) * gamma(lambda + 2.0) / gamma(-lambda);
    throw DomainError("bessel_mellin: order must be 0 or 1");
}

BesselMellinResult bessel_mellin_check(Complex lambda, int n, const BesselMellinOptions& options) {
    if (!in_bessel_mellin_strip(lambda, n)) throw DomainError("bessel_mellin_check: lambda outside the convergence strip");
    if (!(options.truncation >= 50.0)) throw DomainError("bessel_mellin_check: truncation point too small");

    const Complex mu = 2.0 * lambda + 1.0 + static_cast<double>(n);
    // r^{mu+n} (J_n(r) / r^n) stays finite where r^mu alone would overflow.
    const auto integrand = [&](double r) {
        const double reduced = n == 0 ? bessel_j(0, r) : bessel_j(1, r) / r;
        return std::pow(Complex{r, 0.0}, mu + static_cast<double>(n)) * reduced;
    };

    BesselMellinResult out;
    out.numeric = detail::integrate_endpoint(integrand, 0.0, 1.0) +
                  detail::integrate_panels(integrand, 1.0, options.truncation, pi) +
                  bessel_tail(mu, n, options.truncation);
    out.closed = bessel_mellin_closed_form(lambda, n);
    out.relative_deviation = std::abs(out.numeric - out.closed) / std::abs(out.closed);
    return out;
}

}  // namespace nm::oracle
