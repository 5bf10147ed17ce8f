#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "newton_mellin/error.hpp"
#include "newton_mellin/fourier.hpp"
#include "newton_mellin/sampling.hpp"
#include "support.hpp"

using namespace nm;
using nm::test::at_infinity;
using nm::test::at_zero;
using nm::test::close;
using nm::test::poly;
using nm::test::pt;

namespace {

const Rational kHalf(-1, 2);

// Transform of |s|^{2r} (r in (-1, 0)) computed from the classical formula
// Gamma(r+1)/Gamma(-r) |sigma|^{-2r-2}, with std::tgamma.
double radial_transform_constant(double r) { return std::tgamma(r + 1.0) / std::tgamma(-r); }

}  // namespace

TEST_CASE("kappa values") {
    CHECK(close(fourier::kappa(kHalf, 0, 0), 1.0));
    CHECK(close(fourier::kappa(kHalf, 1, 0), 0.5));
    CHECK(close(fourier::kappa(kHalf, 0, 1), -0.5));
    CHECK_THROWS_AS(fourier::kappa(Rational(0), 0, 0), DomainError);
    CHECK_THROWS_AS(fourier::kappa(kHalf, -1, 0), DomainError);
}

TEST_CASE("kappa(r,0,0) is the classical constant of the radial transform") {
    for (const Rational r : {Rational(-1, 2), Rational(-1, 3), Rational(-2, 3), Rational(-1, 6), Rational(-5, 6),
                             Rational(-1, 12)}) {
        CHECK(close(fourier::kappa(r, 0, 0), radial_transform_constant(r.to_double()), 1e-10));
    }
}

TEST_CASE("kappa equals the Gamma-ratio prefactor at the pole") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> den(2, 24);
    for (int i = 0; i < 200; ++i) {
        const int q = den(rng);
        const int p = std::uniform_int_distribution<int>(1, q - 1)(rng);
        const int m1 = i % 5;
        const int m2 = (i / 5) % 5;
        const int nu = (i / 25) % 4;
        CHECK(close(fourier::pole_prefactor(Rational(-p, q), m1, m2, nu), fourier::kappa(Rational(-p, q), m1, m2), 1e-10));
    }
}

TEST_CASE("integer transfer") {
    CHECK(fourier::integer_transfer(0, 0, 1) == -0.5);
    CHECK(fourier::integer_transfer(0, 1, 1) == 0.5);
    CHECK(fourier::integer_transfer(2, 3, 2) == 12.0);  // (+1) * 1 * 2 * 6
}

TEST_CASE("forward examples") {
    const auto f1 = fourier::forward(at_zero({{kHalf, 0, 0, poly({{0, 0.5}})}}));
    CHECK(approx_equal(f1, at_infinity({{kHalf, 1, 1, poly({{0, 0.5}})}}), 1e-12));
    const auto f2 = fourier::forward(at_zero({{Rational(0), 0, 0, poly({{1, 1.0}})}}));
    CHECK(approx_equal(f2, at_infinity({{Rational(0), 1, 1, poly({{0, -0.5}})}}), 1e-12));
    CHECK(fourier::forward(at_zero({{Rational(0), 0, 0, poly({{0, 7.0}})}})).empty());
    CHECK_THROWS_AS(fourier::forward(at_zero({{kHalf, 0, -1, poly({{0, 1.0}})}})), DomainError);
}

TEST_CASE("inverse examples") {
    const auto i1 = fourier::inverse(at_infinity({{kHalf, 1, 1, poly({{0, 0.5}})}}));
    CHECK(approx_equal(i1, at_zero({{kHalf, 0, 0, poly({{0, 0.5}})}}), 1e-12));
    const auto i2 = fourier::inverse(at_infinity({{Rational(0), 1, 1, poly({{0, 0.25}})}}));
    CHECK(approx_equal(i2, at_zero({{Rational(0), 0, 0, poly({{1, -0.5}})}}), 1e-12));
    CHECK_THROWS_AS(fourier::inverse(at_infinity({{kHalf, 0, 1, poly({{0, 1.0}})}})), DomainError);
    CHECK_THROWS_AS(fourier::inverse(at_zero({{kHalf, 1, 1, poly({{0, 1.0}})}})), DomainError);
}

TEST_CASE("tilde polygon examples") {
    const auto t1 = fourier::tilde_polygon(at_infinity({{kHalf, 1, 1, poly({{0, -0.5}})}}));
    CHECK(t1.polygon().vertices() == std::vector<Point>{pt(Rational(1, 2), Rational(1, 2))});
    CHECK(close(t1.decoration(pt(Rational(1, 2), Rational(1, 2))).coefficient, -0.5));
    const auto t2 = fourier::tilde_polygon(at_infinity({{Rational(0), 1, 1, poly({{0, 0.25}})}}));
    CHECK(close(t2.decoration(pt(1, 1)).coefficient, 0.25));
    const auto t3 = fourier::tilde_polygon(
        at_infinity({{kHalf, 1, 1, poly({{0, 1.0}})}, {kHalf, 2, 2, poly({{3, 1.0}})}}));
    CHECK(t3.polygon().vertices() == std::vector<Point>{pt(Rational(1, 2), Rational(1, 2))});
    CHECK(t3.decoration(pt(Rational(1, 2), Rational(1, 2))).degree == 0);
}

TEST_CASE("hat polygon examples") {
    const auto h1 = fourier::hat_polygon(at_zero({{kHalf, 0, 0, poly({{0, 0.5}})}}));
    const Point v = pt(kHalf, kHalf);
    CHECK(h1.polygon().vertices() == std::vector<Point>{v});
    CHECK(close(h1.decoration(v).coefficient, 0.5));
    const auto h2 = fourier::hat_polygon(at_zero({{Rational(0), 0, 0, poly({{1, -0.5}})}}));
    CHECK(close(h2.decoration(pt(0, 0)).coefficient, 0.25));
    CHECK(h2.decoration(pt(0, 0)).degree == 0);
    CHECK(fourier::hat_polygon(at_zero({{Rational(0), 0, 0, poly({{0, 7.0}})}})).empty());
}

TEST_CASE("thom-sebastiani examples") {
    const auto x2 = at_zero({{kHalf, 0, 0, poly({{0, 0.5}})}});
    const auto y3 = at_zero({{Rational(-2, 3), 0, 0, poly({{0, 1.0 / 3.0}})}});
    CHECK(approx_equal(fourier::thom_sebastiani(x2, x2), at_zero({{Rational(0), 0, 0, poly({{1, -0.5}})}}), 1e-12));
    CHECK(fourier::thom_sebastiani(x2, Expansion(Side::AtZero)).empty());

    // Riesz composition: (1/pi) int |u|^{-1} |e-u|^{-4/3} dA = G(1/3)G(1/6) / (G(2/3)G(5/6)),
    // times the density constants 1/2 and 1/3.
    const double riesz = std::tgamma(1.0 / 3) * std::tgamma(1.0 / 6) / (std::tgamma(2.0 / 3) * std::tgamma(5.0 / 6)) / 6.0;
    const auto ts = fourier::thom_sebastiani(x2, y3);
    CHECK(approx_equal(ts, at_zero({{Rational(-1, 6), 0, 0, poly({{0, riesz}})}}), 1e-10));
    CHECK(riesz == doctest::Approx(1.62593).epsilon(1e-4));
}

TEST_CASE("prop_nn and theorem examples") {
    const auto x2 = at_zero({{kHalf, 0, 0, poly({{0, 0.5}})}});
    CHECK(fourier::prop_nn_check(x2));
    CHECK(fourier::prop_nn_check(at_zero({{Rational(0), 0, 0, poly({{1, 1.0}})}})));

    const auto r = fourier::theorem_check(x2, x2);
    CHECK(r.verdict);
    CHECK(r.lhs.polygon().vertices() == std::vector<Point>{pt(0, 0)});
    CHECK(close(r.lhs.decoration(pt(0, 0)).coefficient, 0.25));

    const auto y3 = at_zero({{Rational(-2, 3), 0, 0, poly({{0, 1.0 / 3.0}})}});
    const auto r2 = fourier::theorem_check(x2, y3);
    CHECK(r2.verdict);
    CHECK(r2.lhs.polygon().vertices() == std::vector<Point>{pt(Rational(-1, 6), Rational(-1, 6))});

    const auto two = at_zero({{kHalf, 1, 0, poly({{0, 1.0}})}, {Rational(-1, 3), 0, 2, poly({{1, 2.0}})}});
    const auto r3 = fourier::theorem_check(two, x2);
    CHECK(r3.verdict);
    CHECK(r3.lhs.polygon().vertices().size() == 2);
}

TEST_CASE("transform round trips") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        const auto e = random_fiber_expansion(rng);
        CHECK(approx_equal(fourier::inverse(fourier::forward(e)), mod_smooth(e), 1e-9));
        const auto h = random_hat_expansion(rng);
        CHECK(approx_equal(fourier::forward(fourier::inverse(h)), h, 1e-9));
    }
}

TEST_CASE("forward lands in the image m', m'' >= 1") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        for (const auto& [ex, p] : fourier::forward(random_fiber_expansion(rng)).terms()) {
            CHECK(ex.m1 >= 1);
            CHECK(ex.m2 >= 1);
        }
    }
}

TEST_CASE("decorated multiplicativity on the hat side") {
    std::mt19937_64 rng(44);
    for (int i = 0; i < 200; ++i) {
        const auto h1 = random_hat_expansion(rng);
        const auto h2 = random_hat_expansion(rng);
        const auto lhs = fourier::tilde_polygon(multiply(h1, h2));
        const auto rhs = decorated_minkowski(fourier::tilde_polygon(h1), fourier::tilde_polygon(h2));
        CHECK(compare(lhs, rhs, 1e-9).equal());
    }
}

TEST_CASE("theorem and prop_nn on random expansions") {
    std::mt19937_64 rng(45);
    for (int i = 0; i < 100; ++i) {
        const auto e1 = random_fiber_expansion(rng);
        const auto e2 = random_fiber_expansion(rng);
        CHECK(fourier::prop_nn_check(e1));
        CHECK(fourier::theorem_check(e1, e2).verdict);
    }
}
