#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "newton_mellin/error.hpp"
#include "newton_mellin/fourier.hpp"
#include "newton_mellin/mellin.hpp"
#include "newton_mellin/newton.hpp"
#include "newton_mellin/oracle/bessel_mellin.hpp"
#include "newton_mellin/oracle/convolution.hpp"
#include "newton_mellin/oracle/hat.hpp"
#include "newton_mellin/oracle/laurent.hpp"
#include "newton_mellin/oracle/parallel.hpp"
#include "newton_mellin/oracle/special.hpp"
#include "newton_mellin/sampling.hpp"

namespace nm::cli {
namespace {

using std::numbers::pi;

double relative(Complex numeric, Complex predicted) {
    const double scale = std::abs(predicted);
    return scale == 0.0 ? std::abs(numeric) : std::abs(numeric - predicted) / scale;
}

CaseResult compare_case(std::string name, Complex numeric, Complex predicted, double tol) {
    const double error = relative(numeric, predicted);
    return {std::move(name), numeric, predicted, error, error <= tol};
}

// Boolean property over many random draws; error = fraction failing.
CaseResult property_case(std::string name, std::size_t count, std::size_t failures) {
    const double fraction = count == 0 ? 0.0 : static_cast<double>(failures) / static_cast<double>(count);
    return {std::move(name), Complex(static_cast<double>(count - failures)), Complex(static_cast<double>(count)),
            fraction, failures == 0};
}

SuiteReport gamma_suite(const SuiteOptions& options) {
    SuiteReport report{"gamma", options.tol.value_or(1e-10), {}};
    const double tol = report.tolerance;
    report.cases.push_back(compare_case("Gamma(5)", oracle::gamma(5.0), 24.0, tol));
    report.cases.push_back(compare_case("Gamma(1/2)", oracle::gamma(0.5), std::sqrt(pi), tol));
    report.cases.push_back(compare_case("Gamma(1/8)", oracle::gamma(0.125), std::tgamma(0.125), tol));
    for (const double x : {-3.7, -0.5, 0.3, 2.25, 7.5, 13.1, 19.9}) {
        report.cases.push_back(compare_case("Gamma(" + std::to_string(x) + ") vs tgamma", oracle::gamma(x),
                                            std::tgamma(x), tol));
    }

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> part(-6.0, 6.0);
    std::size_t reflection_failures = 0;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        Complex z{part(rng), part(rng)};
        if (std::abs(z.imag()) < 1e-3 && std::abs(z.real() - std::round(z.real())) < 1e-3) z += Complex{0.5, 0.0};
        const Complex product = oracle::gamma(z) * oracle::gamma(1.0 - z) * std::sin(pi * z) / pi;
        const double error = std::abs(product - 1.0);
        worst = std::max(worst, error);
        if (error > tol) ++reflection_failures;
    }
    auto reflection = property_case("reflection Gamma(z)Gamma(1-z)sin(pi z)/pi = 1, 100 draws", 100, reflection_failures);
    reflection.error = worst;
    report.cases.push_back(reflection);

    std::uniform_int_distribution<int> index(0, 4);
    std::uniform_int_distribution<int> den(2, 12);
    std::size_t prefactor_failures = 0;
    worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const int q = den(rng);
        const int p = std::uniform_int_distribution<int>(1, q - 1)(rng);
        const Rational r(-p, q);
        const int m1 = index(rng);
        const int m2 = index(rng);
        const int nu = std::uniform_int_distribution<int>(0, 3)(rng);
        const double error = relative(fourier::pole_prefactor(r, m1, m2, nu), fourier::kappa(r, m1, m2));
        worst = std::max(worst, error);
        if (error > tol) ++prefactor_failures;
    }
    auto prefactor = property_case("kappa vs Gamma-ratio prefactor at the pole, 200 draws", 200, prefactor_failures);
    prefactor.error = worst;
    report.cases.push_back(prefactor);
    return report;
}

SuiteReport bessel_suite(const SuiteOptions& options) {
    SuiteReport report{"bessel", options.tol.value_or(1e-5), {}};
    for (const double x : {0.0, 0.5, 2.4048255577, 7.0, 11.9, 12.1, 30.0, 150.0}) {
        for (const int n : {0, 1}) {
            const double value = oracle::bessel_j(n, x);
            const double reference = std::cyl_bessel_j(static_cast<double>(n), x);
            CaseResult c{"J" + std::to_string(n) + "(" + std::to_string(x) + ")", value, reference,
                         std::abs(value - reference), false};
            c.pass = c.error <= 1e-10;
            report.cases.push_back(c);
        }
    }

    struct Point {
        Complex lambda;
        int n;
    };
    std::vector<Point> grid;
    for (const Complex l : {Complex{-0.975, 0.0}, {-0.92, 0.3}, {-0.875, 0.0}, {-0.85, -0.7}, {-0.8, 1.2}}) grid.push_back({l, 0});
    for (const Complex l : {Complex{-1.9, 0.0}, {-1.7, 0.5}, {-1.5, 0.0}, {-1.4, -1.0}, {-1.3, 0.25}}) grid.push_back({l, 1});
    std::vector<CaseResult> rows(grid.size());
    oracle::parallel_for(grid.size(), [&](std::size_t i) {
        const auto r = oracle::bessel_mellin_check(grid[i].lambda, grid[i].n);
        const double tol = grid[i].n == 1 && grid[i].lambda == Complex{-1.5, 0.0} ? std::min(report.tolerance, 1e-6)
                                                                                  : report.tolerance;
        rows[i] = compare_case("n=" + std::to_string(grid[i].n) + " lambda=(" + std::to_string(grid[i].lambda.real()) +
                                   "," + std::to_string(grid[i].lambda.imag()) + ")",
                               r.numeric, r.closed, tol);
    });
    report.cases.insert(report.cases.end(), rows.begin(), rows.end());
    return report;
}

SuiteReport mellin_suite(const SuiteOptions& options) {
    SuiteReport report{"mellin", options.tol.value_or(1e-6), {}};
    constexpr double kZeroTolerance = 1e-8;
    struct Job {
        Exponent exponent;
        int ell;
        std::int64_t k1, k2;
        oracle::Cutoff cutoff;
    };
    std::vector<Job> jobs;
    const oracle::Cutoff second = options.cutoff.inner == 0.3 && options.cutoff.outer == 0.8 ? oracle::Cutoff{0.4, 0.9}
                                                                                            : oracle::Cutoff{0.3, 0.8};
    for (const Rational r : {Rational(-1, 2), Rational(-1, 3), Rational(-5, 6)}) {
        for (int m1 = 0; m1 <= 2; ++m1) {
            for (int m2 = 0; m2 <= 2; ++m2) {
                for (int ell = 0; ell <= 2; ++ell) {
                    const auto e = Exponent::make(r, m1, m2);
                    for (const auto& cutoff : {options.cutoff, second}) {
                        jobs.push_back({e, ell, m1, m2, cutoff});
                        jobs.push_back({e, ell, m1 + 1, m2 + 1, cutoff});
                    }
                    jobs.push_back({e, ell, m1 + 1, m2, options.cutoff});
                }
            }
        }
    }

    std::vector<CaseResult> rows(jobs.size());
    oracle::parallel_for(jobs.size(), [&](std::size_t i) {
        const auto& job = jobs[i];
        // u^ell plus lower-order terms, so sub-leading poles are exercised too.
        std::map<int, Complex> coeffs;
        for (int j = 0; j <= job.ell; ++j) coeffs[j] = Complex{1.0 + j, 0.5 * j - 0.25};
        const LogPolynomial poly(coeffs);
        Expansion e(Side::AtZero);
        e.add_term(job.exponent, poly);
        const auto table = mellin_coefficients(e);
        const auto numeric = oracle::numeric_mellin_laurent(job.exponent, poly, job.k1, job.k2,
                                                            oracle::default_probe(job.exponent, job.k1, job.k2), job.cutoff);
        const bool matched = job.k1 - job.exponent.m1 == job.k2 - job.exponent.m2;
        double worst = 0.0;
        bool ok = true;
        Complex worst_numeric{}, worst_predicted{};
        for (std::size_t k = 0; k < numeric.size(); ++k) {
            const Complex predicted = matched ? table.at({job.exponent, static_cast<int>(k)}).raw : Complex{};
            const bool zero = std::abs(predicted) == 0.0;
            const double error = zero ? std::abs(numeric[k]) : relative(numeric[k], predicted);
            const bool pass = error <= (zero ? kZeroTolerance : report.tolerance);
            if (!pass || error >= worst) {
                worst = std::max(worst, error);
                worst_numeric = numeric[k];
                worst_predicted = predicted;
            }
            ok = ok && pass;
        }
        rows[i] = {"r=" + job.exponent.r.str() + " m=(" + std::to_string(job.exponent.m1) + "," +
                       std::to_string(job.exponent.m2) + ") l=" + std::to_string(job.ell) + " k=(" +
                       std::to_string(job.k1) + "," + std::to_string(job.k2) + ") cutoff=(" +
                       std::to_string(job.cutoff.inner) + "," + std::to_string(job.cutoff.outer) + ")",
                   worst_numeric, worst_predicted, worst, ok};
    });
    report.cases.insert(report.cases.end(), rows.begin(), rows.end());

    // Newton-Mellin polygon against the polygon read off the expansion.
    std::mt19937_64 rng(options.seed);
    std::size_t failures = 0;
    for (int i = 0; i < 500; ++i) {
        const auto e = random_fiber_expansion(rng);
        if (!compare(nm_decorated_polygon(e), fourier::tilde_polygon(e), 1e-12).equal()) ++failures;
    }
    report.cases.push_back(property_case("Newton-Mellin polygon = decorated Newton polygon, 500 draws", 500, failures));
    return report;
}

SuiteReport hat_suite(const SuiteOptions& options) {
    SuiteReport report{"hat", options.tol.value_or(0.05), {}};
    struct Job {
        Rational r;
        int m1, m2;
        double phase;
    };
    std::vector<Job> jobs;
    for (const Rational r : {Rational(-1, 2), Rational(-2, 3)}) {
        for (const auto& [m1, m2] : {std::pair{0, 0}, {1, 0}, {0, 1}}) {
            for (const double phase : {0.0, 0.9, 2.5, -1.7}) jobs.push_back({r, m1, m2, phase});
        }
    }
    std::vector<CaseResult> rows(jobs.size());
    oracle::parallel_for(jobs.size(), [&](std::size_t i) {
        const auto& job = jobs[i];
        Expansion e(Side::AtZero);
        e.add_term(Exponent::make(job.r, job.m1, job.m2), LogPolynomial::monomial(1.0, 0));
        const Complex numeric = oracle::numeric_hat_leading(e, options.sigma, job.phase, options.cutoff);
        const Complex predicted = oracle::predicted_hat_leading(e, options.sigma, job.phase);
        rows[i] = compare_case("r=" + job.r.str() + " m=(" + std::to_string(job.m1) + "," + std::to_string(job.m2) +
                                   ") arg=" + std::to_string(job.phase),
                               numeric, predicted, report.tolerance);
    });
    report.cases.insert(report.cases.end(), rows.begin(), rows.end());
    return report;
}

SuiteReport ts_suite(const SuiteOptions& options) {
    SuiteReport report{"ts", options.tol.value_or(fourier::kDecorationTolerance), {}};
    std::mt19937_64 rng(options.seed);

    std::size_t failures = 0;
    for (int i = 0; i < 100; ++i) {
        const auto e1 = random_fiber_expansion(rng);
        const auto e2 = random_fiber_expansion(rng);
        if (!fourier::theorem_check(e1, e2, report.tolerance).verdict) ++failures;
    }
    report.cases.push_back(property_case("theorem on random pairs, 100 draws", 100, failures));

    failures = 0;
    for (int i = 0; i < 100; ++i) {
        if (!fourier::prop_nn_check(random_fiber_expansion(rng), report.tolerance)) ++failures;
    }
    report.cases.push_back(property_case("forward polygon = hat polygon + (1,1), 100 draws", 100, failures));

    failures = 0;
    for (int i = 0; i < 200; ++i) {
        const auto p1 = staircase_hull(random_point_set(rng));
        const auto p2 = staircase_hull(random_point_set(rng));
        try {
            for (const auto& v : minkowski(p1, p2).vertices()) decompose_vertex(p1, p2, v);
        } catch (const std::exception&) {
            ++failures;
        }
    }
    report.cases.push_back(property_case("unique vertex decomposition of Minkowski sums, 200 draws", 200, failures));

    const std::vector<std::pair<int, int>> pairs{{2, 2}, {2, 3}, {2, 1}, {3, 3}};
    std::vector<CaseResult> rows(pairs.size());
    oracle::parallel_for(pairs.size(), [&](std::size_t i) {
        const auto [a, b] = pairs[i];
        const auto check = oracle::convolution_check({a}, {b}, 0.05, 0.1, options.cutoff);
        rows[i] = {"convolution x^" + std::to_string(a) + " + y^" + std::to_string(b) + " (" +
                       oracle::to_string(check.kind) + ")",
                   check.kind == oracle::ConvolutionCheck::Kind::Smooth ? Complex(check.fitted_coefficient)
                                                                        : Complex(check.fitted_rate),
                   check.kind == oracle::ConvolutionCheck::Kind::Smooth ? Complex(check.fitted_coefficient)
                                                                        : Complex(check.predicted_rate),
                   check.deviation, check.pass};
    });
    report.cases.insert(report.cases.end(), rows.begin(), rows.end());
    return report;
}

}  // namespace

bool SuiteReport::pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"bessel", "mellin", "hat", "ts", "gamma"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
    options.cutoff.validate();
    if (name == "gamma") return gamma_suite(options);
    if (name == "bessel") return bessel_suite(options);
    if (name == "mellin") return mellin_suite(options);
    if (name == "hat") return hat_suite(options);
    if (name == "ts") return ts_suite(options);
    throw DomainError("unknown suite '" + name + "'");
}

}  // namespace nm::cli
