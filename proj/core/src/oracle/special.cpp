#include "newton_mellin/oracle/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "newton_mellin/error.hpp"

namespace nm::oracle {
namespace {

using std::numbers::pi;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

std::complex<double> lanczos(std::complex<double> z) {
    z -= 1.0;
    std::complex<double> x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const std::complex<double> t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// sin(pi z), reduced so that exact integers give exact zeros.
std::complex<double> sin_pi(std::complex<double> z) {
    const double n = std::round(z.real());
    const std::complex<double> w{z.real() - n, z.imag()};
    const double sign = std::fmod(std::abs(n), 2.0) == 1.0 ? -1.0 : 1.0;
    return sign * std::sin(pi * w);
}

constexpr double kSeriesLimit = 12.0;

double bessel_series(int n, double x) {
    const double half = 0.5 * x;
    const double q = -half * half;
    double term = n == 0 ? 1.0 : half;
    double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(k + n));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum) && k > 2) break;
    }
    return sum;
}

// J_n(x) ~ sqrt(2/(pi x)) [P cos w - Q sin w], w = x - n pi/2 - pi/4.
double bessel_asymptotic(int n, double x) {
    const double mu = 4.0 * n * n;
    double p = 0.0;
    double q = 0.0;
    double term = 1.0;
    double previous = INFINITY;
    for (int k = 0; k < 60; ++k) {
        if (k > 0) {
            const double odd = 2.0 * k - 1.0;
            term *= (mu - odd * odd) / (k * 8.0 * x);
        }
        if (std::abs(term) > previous) break;
        previous = std::abs(term);
        // i^k a_k / x^k split into P (even k) and Q (odd k).
        switch (k % 4) {
            case 0: p += term; break;
            case 1: q += term; break;
            case 2: p -= term; break;
            default: q -= term; break;
        }
        if (std::abs(term) < 1e-17) break;
    }
    const double w = x - (0.5 * n + 0.25) * pi;
    return std::sqrt(2.0 / (pi * x)) * (p * std::cos(w) - q * std::sin(w));
}

}  // namespace

std::complex<double> gamma(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real())) {
        throw DomainError("gamma: pole at z = " + std::to_string(z.real()));
    }
    if (z.real() < 0.5) return pi / (sin_pi(z) * lanczos(1.0 - z));
    return lanczos(z);
}

double bessel_j(int n, double x) {
    if (n == -1) return -bessel_j(1, x);
    if (n != 0 && n != 1) throw DomainError("bessel_j: order must be -1, 0 or 1");
    if (!(x >= 0.0)) throw DomainError("bessel_j: argument must be non-negative");
    return x <= kSeriesLimit ? bessel_series(n, x) : bessel_asymptotic(n, x);
}

}  // namespace nm::oracle
