#include "newton_mellin/fourier.hpp"

#include <cmath>
#include <numbers>

#include "newton_mellin/error.hpp"
#include "newton_mellin/oracle/special.hpp"

namespace nm::fourier {
namespace {

using oracle::gamma;

double sign_power(std::int64_t n) { return n % 2 == 0 ? 1.0 : -1.0; }

double factorial(std::int64_t n) {
    double out = 1.0;
    for (std::int64_t j = 2; j <= n; ++j) out *= static_cast<double>(j);
    return out;
}

void require_fiber_class(const Expansion& e, const char* op) {
    if (!is_fiber_class(e)) throw DomainError(std::string(op) + ": expansion is not of fiber class");
}

Point bidegree(const Exponent& e) { return {e.x(), e.y()}; }

}  // namespace

Complex kappa(const Rational& r, std::int64_t m1, std::int64_t m2) {
    if (!(r > Rational(-1) && r < Rational(0))) throw DomainError("kappa: r = " + r.str() + " outside (-1, 0)");
    if (m1 < 0 || m2 < 0) throw DomainError("kappa: negative index");
    const double rd = r.to_double();
    return sign_power(m2 + 1) / std::numbers::pi * gamma(rd + static_cast<double>(m1) + 1.0) *
           gamma(rd + static_cast<double>(m2) + 1.0) * std::sin(std::numbers::pi * rd);
}

Complex pole_prefactor(const Rational& r, std::int64_t m1, std::int64_t m2, std::int64_t nu) {
    if (!(r > Rational(-1) && r < Rational(0))) throw DomainError("pole_prefactor: r outside (-1, 0)");
    if (m1 < 0 || m2 < 0 || nu < 0) throw DomainError("pole_prefactor: negative index");
    const std::int64_t k1 = m1 + nu;
    const std::int64_t k2 = m2 + nu;
    const Complex pole = static_cast<double>(nu) - r.to_double() - 1.0;
    return gamma(-pole) * sign_power(k1) * gamma(pole + 1.0) /
           (gamma(pole + 1.0 - static_cast<double>(k1)) * gamma(pole + 1.0 - static_cast<double>(k2)));
}

double integer_transfer(std::int64_t m1, std::int64_t m2, int k) {
    return sign_power(m2 + 1) * (0.5 * k) * factorial(m1) * factorial(m2);
}

Expansion forward(const Expansion& e) {
    require_fiber_class(e, "forward");
    Expansion out(Side::AtInfinity);
    const Expansion reduced = mod_smooth(e);
    for (const auto& [ex, poly] : reduced.terms()) {
        const Exponent target{ex.r, ex.m1 + 1, ex.m2 + 1};
        if (!ex.r.is_zero()) {
            out.add_term(target, poly * kappa(ex.r, ex.m1, ex.m2));
            continue;
        }
        std::map<int, Complex> shifted;
        for (const auto& [k, a] : poly.terms()) shifted[k - 1] = a * integer_transfer(ex.m1, ex.m2, k);
        out.add_term(target, LogPolynomial(std::move(shifted)));
    }
    return out;
}

Expansion inverse(const Expansion& e) {
    if (e.side() != Side::AtInfinity) throw DomainError("inverse: expansion is not on the infinity side");
    Expansion out(Side::AtZero);
    for (const auto& [ex, poly] : e.terms()) {
        if (ex.m1 < 1 || ex.m2 < 1) {
            throw DomainError("inverse: term (" + ex.r.str() + "," + std::to_string(ex.m1) + "," +
                              std::to_string(ex.m2) + ") outside the image of the transform");
        }
        const Exponent source{ex.r, ex.m1 - 1, ex.m2 - 1};
        if (!ex.r.is_zero()) {
            out.add_term(source, poly * (1.0 / kappa(ex.r, source.m1, source.m2)));
            continue;
        }
        std::map<int, Complex> shifted;
        for (const auto& [k, a] : poly.terms()) shifted[k + 1] = a / integer_transfer(source.m1, source.m2, k + 1);
        out.add_term(source, LogPolynomial(std::move(shifted)));
    }
    return out;
}

DecoratedPolygon tilde_polygon(const Expansion& e) {
    std::map<Point, Decoration> candidates;
    for (const auto& [ex, poly] : e.terms()) candidates.emplace(bidegree(ex), Decoration{poly.leading(), poly.degree()});
    return DecoratedPolygon::from_candidates(candidates);
}

DecoratedPolygon hat_polygon(const Expansion& e) {
    require_fiber_class(e, "hat_polygon");
    std::map<Point, Decoration> candidates;
    const Expansion reduced = mod_smooth(e);
    for (const auto& [ex, poly] : reduced.terms()) {
        const int ell = poly.degree();
        const Complex b = poly.leading();
        if (!ex.r.is_zero()) {
            candidates.emplace(bidegree(ex), Decoration{kappa(ex.r, ex.m1, ex.m2) * b, ell});
        } else {
            // mod_smooth leaves only u^k, k >= 1, at integer points.
            candidates.emplace(bidegree(ex), Decoration{integer_transfer(ex.m1, ex.m2, ell) * b, ell - 1});
        }
    }
    return DecoratedPolygon::from_candidates(candidates);
}

Expansion thom_sebastiani(const Expansion& e1, const Expansion& e2) {
    require_fiber_class(e1, "thom_sebastiani");
    require_fiber_class(e2, "thom_sebastiani");
    const Expansion product = multiply(forward(e1), forward(e2));
    for (const auto& [ex, poly] : product.terms()) {
        if (ex.m1 < 1 || ex.m2 < 1) throw std::logic_error("thom_sebastiani: product left the image of the transform");
    }
    return inverse(product);
}

bool prop_nn_check(const Expansion& e, double rel_tol) {
    const DecoratedPolygon lhs = tilde_polygon(forward(e));
    const DecoratedPolygon rhs = translate(hat_polygon(e), Point{1, 1});
    return compare(lhs, rhs, rel_tol).equal();
}

TheoremReport theorem_check(const Expansion& e1, const Expansion& e2, double rel_tol) {
    TheoremReport report;
    report.lhs = hat_polygon(thom_sebastiani(e1, e2));
    report.rhs = translate(decorated_minkowski(hat_polygon(e1), hat_polygon(e2)), Point{1, 1});
    const PolygonComparison cmp = compare(report.lhs, report.rhs, rel_tol);
    report.verdict = cmp.equal();
    report.max_coefficient_deviation = cmp.max_deviation;
    return report;
}

}  // namespace nm::fourier
