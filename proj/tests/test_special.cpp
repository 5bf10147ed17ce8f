#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "newton_mellin/error.hpp"
#include "newton_mellin/oracle/cutoff.hpp"
#include "newton_mellin/oracle/special.hpp"

using Complex = std::complex<double>;
using nm::oracle::bessel_j;

namespace {

// Reference complex gamma for Re z > 0: recurrence up to |z| >= 20, then the
// Stirling series for log Gamma with Bernoulli terms through B_16.
Complex stirling_gamma(Complex z) {
    Complex shift{1.0, 0.0};
    while (std::abs(z) < 20.0) {
        shift *= z;
        z += 1.0;
    }
    constexpr double bernoulli[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
    Complex log_gamma = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi);
    Complex power = z;
    for (int k = 1; k <= 8; ++k) {
        log_gamma += bernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0) * power);
        power *= z * z;
    }
    return std::exp(log_gamma) / shift;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("gamma examples") {
    CHECK(rel(nm::oracle::gamma(5.0), 24.0) < 1e-12);
    CHECK(rel(nm::oracle::gamma(0.5), std::sqrt(std::numbers::pi)) < 1e-12);
    CHECK(rel(nm::oracle::gamma(0.125), 7.5339415987976) < 1e-12);
    CHECK_THROWS_AS(nm::oracle::gamma(0.0), nm::DomainError);
    CHECK_THROWS_AS(nm::oracle::gamma(-3.0), nm::DomainError);
}

TEST_CASE("gamma matches tgamma on the real line") {
    for (double x = -9.75; x <= 20.0; x += 0.37) {
        if (std::abs(x - std::round(x)) < 1e-9 && x <= 0) continue;
        CHECK(rel(nm::oracle::gamma(x), std::tgamma(x)) < 1e-10);
    }
}

TEST_CASE("gamma matches the Stirling reference off the real line") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> re(0.5, 12.0);
    std::uniform_real_distribution<double> im(-12.0, 12.0);
    for (int i = 0; i < 300; ++i) {
        const Complex z{re(rng), im(rng)};
        if (std::abs(z) > 20.0) continue;
        CHECK(rel(nm::oracle::gamma(z), stirling_gamma(z)) < 1e-10);
    }
}

TEST_CASE("gamma reflection identity") {
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> part(-8.0, 8.0);
    for (int i = 0; i < 100; ++i) {
        const Complex z{part(rng), part(rng)};
        const Complex product = nm::oracle::gamma(z) * nm::oracle::gamma(1.0 - z) * std::sin(std::numbers::pi * z) / std::numbers::pi;
        CHECK(std::abs(product - 1.0) < 1e-10);
    }
}

TEST_CASE("bessel J examples") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(1, 0.0) == 0.0);
    CHECK(std::abs(bessel_j(0, 2.4048255577)) < 1e-9);
}

TEST_CASE("bessel J matches std::cyl_bessel_j across the series/asymptotic switch") {
    for (double x = 0.0; x <= 400.0; x += (x < 20.0 ? 0.173 : 3.17)) {
        CHECK(std::abs(bessel_j(0, x) - std::cyl_bessel_j(0.0, x)) < 1e-10);
        CHECK(std::abs(bessel_j(1, x) - std::cyl_bessel_j(1.0, x)) < 1e-10);
        CHECK(bessel_j(-1, x) == -bessel_j(1, x));
    }
    for (const double x : {11.999, 12.0, 12.001}) CHECK(std::abs(bessel_j(0, x) - std::cyl_bessel_j(0.0, x)) < 1e-10);
}

TEST_CASE("bessel J first zero by bisection on the implementation") {
    double lo = 2.0, hi = 3.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (bessel_j(0, lo) * bessel_j(0, mid) <= 0.0 ? hi : lo) = mid;
    }
    CHECK(lo == doctest::Approx(2.404825557695773).epsilon(1e-12));
}

TEST_CASE("cutoff is a smooth plateau") {
    const nm::oracle::Cutoff c;
    CHECK(c(0.1) == 1.0);
    CHECK(c(0.5) == 1.0);
    CHECK(c(1.0) == 0.0);
    CHECK(c(0.75) == doctest::Approx(0.5));
    double previous = 1.0;
    for (double r = 0.5; r <= 1.0; r += 0.01) {
        CHECK(c(r) <= previous + 1e-15);
        previous = c(r);
        // derivative against a central difference
        if (r > 0.52 && r < 0.98) CHECK(c.derivative(r) == doctest::Approx((c(r + 1e-6) - c(r - 1e-6)) / 2e-6).epsilon(1e-5));
    }
    CHECK_THROWS_AS((nm::oracle::Cutoff{1.0, 0.5}).validate(), nm::DomainError);
}
