// Thin adaptive-quadrature layer over Boost.Math. Private to the oracle.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "newton_mellin/error.hpp"

namespace nm::oracle::detail {

inline constexpr double kQuadratureTolerance = 1e-10;

inline void check_error(double error, double l1, double tol, const char* what) {
    if (!(error <= 100.0 * tol * std::max(l1, 1e-300)) && error > 1e-14) {
        throw ConvergenceError(std::string(what) + ": quadrature did not converge (error " + std::to_string(error) +
                               ", L1 " + std::to_string(l1) + ")");
    }
}

/// Adaptive Gauss-Kronrod (21 points) for integrands smooth on [a, b].
template <class F>
auto integrate_smooth(F f, double a, double b, double tol = kQuadratureTolerance) {
    double error = 0.0;
    double l1 = 0.0;
    auto value = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(f, a, b, 15, tol, &error, &l1);
    check_error(error, l1, tol, "integrate_smooth");
    return value;
}

/// Tanh-sinh for integrands with integrable endpoint singularities.
template <class F>
auto integrate_endpoint(F f, double a, double b, double tol = kQuadratureTolerance) {
    // One rule per thread: the abscissa tables grow lazily.
    static thread_local boost::math::quadrature::tanh_sinh<double> rule;
    double error = 0.0;
    double l1 = 0.0;
    try {
        auto value = rule.integrate(f, a, b, tol, &error, &l1);
        check_error(error, l1, tol, "integrate_endpoint");
        return value;
    } catch (const boost::math::evaluation_error& e) {
        throw ConvergenceError(std::string("integrate_endpoint: ") + e.what());
    }
}

/// Oscillatory integrand on [a, b]: Gauss-Kronrod over consecutive
/// panels of width at most `panel`.
template <class F>
auto integrate_panels(F f, double a, double b, double panel, double tol = kQuadratureTolerance) {
    using Value = decltype(f(a));
    Value total{};
    const int count = std::max(1, static_cast<int>(std::ceil((b - a) / panel)));
    const double width = (b - a) / count;
    for (int i = 0; i < count; ++i) {
        const double lo = a + i * width;
        const double hi = i + 1 == count ? b : lo + width;
        total += integrate_smooth(f, lo, hi, tol);
    }
    return total;
}

}  // namespace nm::oracle::detail
