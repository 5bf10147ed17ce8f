#include "newton_mellin/oracle/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "newton_mellin/error.hpp"
#include "newton_mellin/fourier.hpp"
#include "quadrature.hpp"

namespace nm::oracle {
namespace {

using std::numbers::pi;

constexpr double kTolerance = 1e-9;
constexpr int kCircleNodes = 64;

void check_germ(const MonomialGerm& germ) {
    if (germ.exponent < 1 || germ.exponent > 4) throw DomainError("ts_convolution: germ exponent must be in 1..4");
}

// Mean over the full circle of f(|centre + rho e^{i theta}|), trapezoid rule.
template <class F>
double circle_mean(F f, double centre, double rho) {
    double sum = 0.0;
    for (int j = 0; j < kCircleNodes; ++j) {
        const double theta = 2.0 * pi * j / kCircleNodes;
        sum += f(std::abs(Complex{centre + rho * std::cos(theta), rho * std::sin(theta)}));
    }
    return sum / kCircleNodes;
}

double convolve_at(const MonomialGerm& a, const MonomialGerm& b, double S, const Cutoff& cutoff) {
    const auto density_a = [&](double rho) { return fiber_density(a, rho, cutoff); };
    const auto density_b = [&](double rho) { return fiber_density(b, rho, cutoff); };
    // rho * density, without forming rho^{2/a - 2} near 0.
    const auto weighted = [&](const MonomialGerm& g, double rho) {
        return std::pow(rho, 2.0 / g.exponent - 1.0) * cutoff(rho) / g.exponent;
    };

    if (S == 0.0) {
        if (a.exponent != 1 && b.exponent != 1) throw DomainError("ts_convolution: s = 0 is singular for this pair");
        return 2.0 * detail::integrate_endpoint([&](double rho) { return weighted(a, rho) * density_b(rho); }, 0.0,
                                                cutoff.outer, kTolerance);
    }

    const double d = S / 4.0;
    // Discs of radius d around u = 0 and u = s; the other density is
    // analytic on each, so the angular mean is a trapezoid rule.
    const double near_zero = detail::integrate_endpoint(
        [&](double rho) { return 2.0 * weighted(a, rho) * circle_mean(density_b, S, rho); }, 0.0, d, kTolerance);
    const double near_s = detail::integrate_endpoint(
        [&](double rho) { return 2.0 * weighted(b, rho) * circle_mean(density_a, -S, rho); }, 0.0, d, kTolerance);

    // Remainder in polar coordinates around 0, angles theta in [delta, pi]
    // (doubled by symmetry), with |u - s| >= d enforced through delta.
    const auto ring = [&](double rho) {
        double delta = 0.0;
        if (rho > S - d && rho < S + d) {
            const double c = (rho * rho + S * S - d * d) / (2.0 * rho * S);
            delta = std::acos(std::clamp(c, -1.0, 1.0));
        }
        const auto angular = [&](double theta) {
            return density_b(std::abs(Complex{S - rho * std::cos(theta), -rho * std::sin(theta)}));
        };
        const double mean = detail::integrate_smooth(angular, delta, pi, kTolerance) / pi;
        return 2.0 * rho * density_a(rho) * mean;
    };
    double rest = detail::integrate_smooth(ring, d, S - d, kTolerance);
    rest += detail::integrate_endpoint(ring, S - d, S + d, kTolerance);
    rest += detail::integrate_smooth(ring, S + d, cutoff.inner, kTolerance);
    rest += detail::integrate_smooth(ring, cutoff.inner, cutoff.outer, kTolerance);
    return near_zero + near_s + rest;
}

}  // namespace

double fiber_density(const MonomialGerm& germ, double rho, const Cutoff& cutoff) {
    if (germ.exponent < 1) throw DomainError("fiber_density: exponent must be positive");
    const double a = germ.exponent;
    return std::pow(rho, 2.0 / a - 2.0) * cutoff(rho) / a;
}

Expansion monomial_expansion(const MonomialGerm& germ) {
    if (germ.exponent < 1) throw DomainError("monomial_expansion: exponent must be positive");
    Expansion e(Side::AtZero);
    const Rational rho = Rational(1, germ.exponent) - Rational(1);
    e.add_term(canonicalize(rho, 0, 0), LogPolynomial::monomial(Complex{1.0 / germ.exponent, 0.0}, 0));
    return mod_smooth(e);
}

std::vector<Complex> ts_convolution(const MonomialGerm& a, const MonomialGerm& b, const std::vector<Complex>& s_values,
                                    const Cutoff& cutoff) {
    check_germ(a);
    check_germ(b);
    cutoff.validate();
    if (cutoff.inner < 0.5) throw DomainError("ts_convolution: cutoff plateau must contain |s| <= 1/2");
    std::vector<Complex> out;
    out.reserve(s_values.size());
    for (const Complex s : s_values) {
        const double S = std::abs(s);
        if (!(S <= 0.2)) throw DomainError("ts_convolution: |s| must be at most 0.2");
        out.emplace_back(convolve_at(a, b, S, cutoff), 0.0);
    }
    return out;
}

LogFit fit_log(const std::vector<double>& x, const std::vector<double>& values) {
    if (x.size() != values.size() || x.size() < 2) throw DomainError("fit_log: need at least two matching samples");
    const double n = static_cast<double>(x.size());
    double sl = 0.0, sll = 0.0, sv = 0.0, slv = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double l = std::log(x[i]);
        sl += l;
        sll += l * l;
        sv += values[i];
        slv += l * values[i];
    }
    const double det = n * sll - sl * sl;
    if (det == 0.0) throw DomainError("fit_log: degenerate sample points");
    LogFit fit;
    fit.c1 = (n * slv - sl * sv) / det;
    fit.c0 = (sv - fit.c1 * sl) / n;
    return fit;
}

PowerFit fit_power(double x, double v_x, double v_half, double v_quarter) {
    const double d1 = v_half - v_x;
    const double d2 = v_quarter - v_half;
    if (d1 == 0.0 || d2 / d1 <= 0.0) throw DomainError("fit_power: differences do not fit a power law");
    PowerFit fit;
    fit.alpha = -std::log2(d2 / d1);
    fit.coefficient = d1 / (std::pow(x / 2.0, fit.alpha) - std::pow(x, fit.alpha));
    return fit;
}

const char* to_string(ConvolutionCheck::Kind kind) noexcept {
    switch (kind) {
        case ConvolutionCheck::Kind::Smooth: return "smooth";
        case ConvolutionCheck::Kind::Logarithmic: return "log";
        case ConvolutionCheck::Kind::Power: return "power";
    }
    return "?";
}

ConvolutionCheck convolution_check(const MonomialGerm& a, const MonomialGerm& b, double tol, double scale,
                                   const Cutoff& cutoff) {
    ConvolutionCheck check;
    check.symbolic = fourier::thom_sebastiani(monomial_expansion(a), monomial_expansion(b));
    const std::vector<double> xs{scale, scale / 2.0, scale / 4.0};
    std::vector<Complex> samples(xs.begin(), xs.end());

    if (check.symbolic.empty()) {
        check.kind = ConvolutionCheck::Kind::Smooth;
        samples.emplace_back(0.0);
        const auto values = ts_convolution(a, b, samples, cutoff);
        const double at_zero = values[3].real();
        check.fitted_coefficient = at_zero;
        check.deviation = std::abs(values[2].real() - at_zero) / std::max(std::abs(at_zero), 1e-300);
        check.pass = check.deviation <= tol;
        return check;
    }
    if (check.symbolic.size() != 1) throw std::logic_error("convolution_check: expected a single symbolic term");
    const auto& [exponent, poly] = *check.symbolic.terms().begin();
    if (exponent.m1 != 0 || exponent.m2 != 0) throw std::logic_error("convolution_check: unexpected symbolic exponent");

    const auto values = ts_convolution(a, b, samples, cutoff);
    std::vector<double> real_values;
    for (const auto& v : values) real_values.push_back(v.real());

    if (exponent.r.num() == 0) {
        check.kind = ConvolutionCheck::Kind::Logarithmic;
        check.predicted_rate = poly.coefficient(1).real();
        const auto fit = fit_log(xs, real_values);
        check.fitted_rate = fit.c1;
        check.fitted_coefficient = fit.c0;
        check.deviation = std::abs(check.fitted_rate - check.predicted_rate) / std::abs(check.predicted_rate);
    } else {
        check.kind = ConvolutionCheck::Kind::Power;
        check.predicted_rate = 2.0 * exponent.r.to_double();
        check.predicted_coefficient = poly.coefficient(0).real();
        const auto fit = fit_power(scale, real_values[0], real_values[1], real_values[2]);
        check.fitted_rate = fit.alpha;
        check.fitted_coefficient = fit.coefficient;
        check.deviation =
            std::max(std::abs(fit.alpha - check.predicted_rate) / std::abs(check.predicted_rate),
                     std::abs(fit.coefficient - check.predicted_coefficient) / std::abs(check.predicted_coefficient));
    }
    check.pass = check.deviation <= tol;
    return check;
}

}  // namespace nm::oracle
