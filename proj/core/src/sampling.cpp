#include "newton_mellin/sampling.hpp"

#include <algorithm>
#include <numbers>

namespace nm {
namespace {

Complex random_coefficient(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> modulus(0.5, 2.0);
    std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
    return std::polar(modulus(rng), phase(rng));
}

LogPolynomial random_polynomial(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::bernoulli_distribution keep(0.6);
    const int ell = degree(rng);
    std::map<int, Complex> coeffs;
    for (int k = 0; k < ell; ++k) {
        if (keep(rng)) coeffs[k] = random_coefficient(rng);
    }
    coeffs[ell] = random_coefficient(rng);
    return LogPolynomial(std::move(coeffs));
}

Expansion random_expansion(std::mt19937_64& rng, const FiberSampleOptions& options, Side side, int min_index) {
    std::uniform_int_distribution<int> terms(1, options.max_terms);
    std::uniform_int_distribution<std::size_t> pick_r(0, options.r_choices.size() - 1);
    std::uniform_int_distribution<int> index(min_index, options.max_index + min_index);
    Expansion out(side);
    const int n = terms(rng);
    for (int i = 0; i < n; ++i) {
        const Exponent e = Exponent::make(options.r_choices[pick_r(rng)], index(rng), index(rng));
        out.add_term(e, random_polynomial(rng, options.max_log_degree));
    }
    return out;
}

}  // namespace

Expansion random_fiber_expansion(std::mt19937_64& rng, const FiberSampleOptions& options) {
    for (;;) {
        Expansion e = random_expansion(rng, options, Side::AtZero, 0);
        if (!mod_smooth(e).empty()) return e;
    }
}

Expansion random_hat_expansion(std::mt19937_64& rng, const FiberSampleOptions& options) {
    return random_expansion(rng, options, Side::AtInfinity, 1);
}

std::vector<Point> random_point_set(std::mt19937_64& rng, int max_points) {
    static constexpr std::int64_t kDenominators[] = {1, 2, 3, 6};
    std::uniform_int_distribution<int> count(1, max_points);
    std::uniform_int_distribution<std::int64_t> numerator(-12, 12);
    std::uniform_int_distribution<int> denominator(0, 3);
    std::vector<Point> points;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const Rational x(numerator(rng), kDenominators[denominator(rng)]);
        const Rational y(numerator(rng), kDenominators[denominator(rng)]);
        points.push_back({x, y});
    }
    std::ranges::sort(points);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

}  // namespace nm
