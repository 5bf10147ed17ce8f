// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if
// any criterion fails. Tolerances and counts are fixed here on purpose;
// no command-line overrides.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "newton_mellin/error.hpp"
#include "newton_mellin/fourier.hpp"
#include "newton_mellin/io.hpp"
#include "newton_mellin/mellin.hpp"
#include "newton_mellin/newton.hpp"
#include "newton_mellin/oracle/bessel_mellin.hpp"
#include "newton_mellin/oracle/convolution.hpp"
#include "newton_mellin/oracle/hat.hpp"
#include "newton_mellin/oracle/laurent.hpp"
#include "newton_mellin/oracle/parallel.hpp"
#include "newton_mellin/sampling.hpp"

#ifdef NM_ACCEPTANCE_CLI
#include "cli.hpp"
#endif

using namespace nm;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double relative(Complex a, Complex b) {
    const double scale = std::abs(b);
    return scale == 0.0 ? std::abs(a) : std::abs(a - b) / scale;
}

std::string fmt(const char* pattern, auto... args) {
    char buffer[256];
    std::snprintf(buffer, sizeof buffer, pattern, args...);
    return buffer;
}

// 1. theorem_check on 500 random pairs.
Outcome main_theorem() {
    std::mt19937_64 rng(kSeed);
    int passed = 0;
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        const auto e1 = random_fiber_expansion(rng);
        const auto e2 = random_fiber_expansion(rng);
        const auto report = fourier::theorem_check(e1, e2, 1e-9);
        worst = std::max(worst, report.max_coefficient_deviation);
        if (report.verdict) ++passed;
    }
    return {passed == 500, fmt("%d/500 pairs, max coefficient deviation %.3g (tol 1e-9)", passed, worst)};
}

// 2. prop_nn_check on 300 random expansions.
Outcome forward_polygon() {
    std::mt19937_64 rng(kSeed + 1);
    int passed = 0;
    for (int i = 0; i < 300; ++i) {
        if (fourier::prop_nn_check(random_fiber_expansion(rng), 1e-9)) ++passed;
    }
    return {passed == 300, fmt("%d/300 expansions (tol 1e-9)", passed)};
}

// 3. Vertex decomposition in Minkowski sums, by exhaustive scan of all
// generator pairs, plus the sum itself recomputed as the hull of all
// pairwise sums.
Outcome minkowski_lemma() {
    std::mt19937_64 rng(kSeed + 2);
    int passed = 0;
    for (int i = 0; i < 1000; ++i) {
        auto s1 = random_point_set(rng);
        auto s2 = random_point_set(rng);
        std::sort(s1.begin(), s1.end());
        s1.erase(std::unique(s1.begin(), s1.end()), s1.end());
        std::sort(s2.begin(), s2.end());
        s2.erase(std::unique(s2.begin(), s2.end()), s2.end());
        const auto p1 = staircase_hull(s1);
        const auto p2 = staircase_hull(s2);
        const auto sum = minkowski(p1, p2);

        std::vector<Point> sums;
        for (const auto& a : s1)
            for (const auto& b : s2) sums.push_back(a + b);
        bool ok = staircase_hull(sums).vertices() == sum.vertices();

        const std::set<Point> v1(p1.vertices().begin(), p1.vertices().end());
        const std::set<Point> v2(p2.vertices().begin(), p2.vertices().end());
        for (const auto& v : sum.vertices()) {
            int hits = 0;
            std::pair<Point, Point> found;
            for (const auto& a : s1) {
                for (const auto& b : s2) {
                    if (a + b == v) {
                        ++hits;
                        found = {a, b};
                    }
                }
            }
            ok = ok && hits == 1 && v1.contains(found.first) && v2.contains(found.second);
            try {
                ok = ok && decompose_vertex(p1, p2, v) == found;
            } catch (const Error&) {
                ok = false;
            }
        }
        if (ok) ++passed;
    }
    return {passed == 1000, fmt("%d/1000 pairs decompose uniquely", passed)};
}

// 4. Symbolic Mellin coefficients vs contour extraction.
Outcome mellin_agreement() {
    struct Job {
        Exponent exponent;
        int ell;
        std::int64_t nu;
        oracle::Cutoff cutoff;
    };
    std::vector<Job> jobs;
    for (const Rational r : {Rational(-1, 2), Rational(-1, 3), Rational(-5, 6)})
        for (int m1 = 0; m1 <= 2; ++m1)
            for (int m2 = 0; m2 <= 2; ++m2)
                for (int ell = 0; ell <= 2; ++ell)
                    for (const oracle::Cutoff c : {oracle::Cutoff{0.5, 1.0}, oracle::Cutoff{0.3, 0.8}})
                        for (const std::int64_t nu : {0, 1}) jobs.push_back({Exponent::make(r, m1, m2), ell, nu, c});

    std::vector<double> errors(jobs.size(), 0.0);
    std::vector<char> ok(jobs.size(), 0);
    oracle::parallel_for(jobs.size(), [&](std::size_t i) {
        const auto& job = jobs[i];
        std::map<int, Complex> coeffs;
        for (int j = 0; j <= job.ell; ++j) coeffs[j] = Complex{1.0 - 0.5 * j, 0.75 * j + 0.1};
        const LogPolynomial poly(coeffs);
        Expansion e(Side::AtZero);
        e.add_term(job.exponent, poly);
        const auto table = mellin_coefficients(e);
        const auto k1 = job.exponent.m1 + job.nu, k2 = job.exponent.m2 + job.nu;
        try {
            const auto numeric = oracle::numeric_mellin_laurent(job.exponent, poly, k1, k2,
                                                                oracle::default_probe(job.exponent, k1, k2), job.cutoff);
            bool good = true;
            for (std::size_t k = 0; k < numeric.size(); ++k) {
                const Complex predicted = table.at({job.exponent, static_cast<int>(k)}).raw;
                if (predicted == Complex{}) {
                    // beyond the top log degree: must vanish
                    good = good && std::abs(numeric[k]) <= 1e-8;
                } else {
                    errors[i] = std::max(errors[i], relative(numeric[k], predicted));
                    good = good && relative(numeric[k], predicted) <= 1e-6;
                }
            }
            ok[i] = good;
        } catch (const Error&) {
            ok[i] = 0;
        }
    });
    const auto passed = std::count(ok.begin(), ok.end(), 1);
    const double worst = *std::max_element(errors.begin(), errors.end());
    return {passed == static_cast<long>(jobs.size()),
            fmt("%ld/%zu (term, log degree, pole, cutoff) cases, max relative error %.3g (tol 1e-6)", passed,
                jobs.size(), worst)};
}

// 5. Bessel-Mellin closed forms.
Outcome bessel_mellin() {
    struct Job {
        Complex lambda;
        int n;
        double tol;
    };
    const std::vector<Job> jobs{
        {{-0.975, 0.0}, 0, 1e-5}, {{-0.92, 0.3}, 0, 1e-5}, {{-0.875, 0.0}, 0, 1e-5}, {{-0.85, -0.7}, 0, 1e-5},
        {{-0.8, 1.2}, 0, 1e-5},   {{-1.9, 0.0}, 1, 1e-5},  {{-1.7, 0.5}, 1, 1e-5},   {{-1.5, 0.0}, 1, 1e-6},
        {{-1.4, -1.0}, 1, 1e-5},  {{-1.3, 0.25}, 1, 1e-5},
    };
    std::vector<double> errors(jobs.size(), 1.0);
    oracle::parallel_for(jobs.size(), [&](std::size_t i) {
        try {
            errors[i] = oracle::bessel_mellin_check(jobs[i].lambda, jobs[i].n).relative_deviation;
        } catch (const Error&) {
        }
    });
    int passed = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i)
        if (errors[i] < jobs[i].tol) ++passed;
    // jobs[7] is int_0^inf J1(r)/r dr
    const double exact = std::abs(oracle::bessel_mellin_check({-1.5, 0.0}, 1).numeric - 1.0);
    return {passed == 10 && exact < 1e-6,
            fmt("%d/10 strip points, max deviation %.3g (tol 1e-5); int J1(r)/r dr off by %.3g (tol 1e-6)", passed,
                *std::max_element(errors.begin(), errors.end()), exact)};
}

// 6. Numeric Fourier asymptotics at |sigma| = 200.
Outcome fourier_asymptotics() {
    struct Job {
        Rational r;
        int m1, m2;
        double phase;
    };
    std::vector<Job> jobs;
    for (const Rational r : {Rational(-1, 2), Rational(-2, 3)})
        for (const auto& [m1, m2] : {std::pair{0, 0}, {1, 0}, {0, 1}})
            for (const double phase : {0.0, 0.9, 2.5, -1.7}) jobs.push_back({r, m1, m2, phase});
    std::vector<Complex> numeric(jobs.size()), predicted(jobs.size());
    std::vector<char> failed(jobs.size(), 0);
    oracle::parallel_for(jobs.size(), [&](std::size_t i) {
        Expansion e(Side::AtZero);
        e.add_term(Exponent::make(jobs[i].r, jobs[i].m1, jobs[i].m2), LogPolynomial::monomial(1.0, 0));
        try {
            numeric[i] = oracle::numeric_hat_leading(e, 200.0, jobs[i].phase);
            predicted[i] = oracle::predicted_hat_leading(e, 200.0, jobs[i].phase);
        } catch (const Error&) {
            failed[i] = 1;
        }
    });
    int passed = 0;
    double worst = 0.0, worst_phase = 0.0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (failed[i]) continue;
        const double error = relative(numeric[i], predicted[i]);
        worst = std::max(worst, error);
        // phase dependence on its own: the ratio to the arg sigma = 0 case
        const std::size_t base = i - i % 4;
        const Complex expected = std::polar(1.0, -(jobs[i].m1 - jobs[i].m2) * jobs[i].phase);
        const double phase_error = failed[base] ? 1.0 : relative(numeric[i] / numeric[base], expected);
        worst_phase = std::max(worst_phase, phase_error);
        if (error <= 0.05 && phase_error <= 0.05) ++passed;
    }
    return {passed == static_cast<int>(jobs.size()),
            fmt("%d/%zu (6 terms x 4 arg sigma), max ratio error %.3g, max phase error %.3g (tol 5%%)", passed,
                jobs.size(), worst, worst_phase)};
}

// 7. x^2 + y^2 and x^2 + y^3 end to end.
Outcome convolution_demo() {
    const auto e2 = oracle::monomial_expansion({2});
    const auto e3 = oracle::monomial_expansion({3});
    Expansion expected(Side::AtZero);
    expected.add_term(Exponent::make(Rational(0), 0, 0), LogPolynomial::monomial(-0.5, 1));
    const bool symbolic22 = approx_equal(fourier::thom_sebastiani(e2, e2), expected, 1e-9);
    const auto ts23 = fourier::thom_sebastiani(e2, e3);
    bool symbolic23 = ts23.size() == 1;
    if (symbolic23) {
        const auto& ex = ts23.terms().begin()->first;
        symbolic23 = ex.x() == Rational(-1, 6) && ex.y() == Rational(-1, 6);
    }

    oracle::ConvolutionCheck c22, c23;
    std::vector<std::function<void()>> work{[&] { c22 = oracle::convolution_check({2}, {2}); },
                                            [&] { c23 = oracle::convolution_check({2}, {3}); }};
    bool threw = false;
    std::mutex m;
    oracle::parallel_for(work.size(), [&](std::size_t i) {
        try {
            work[i]();
        } catch (const Error&) {
            std::lock_guard lock(m);
            threw = true;
        }
    });
    const bool log_ok = !threw && std::abs(c22.fitted_rate + 0.5) <= 0.05 * 0.5;
    // slope of log T against log|s| is 2 * bidegree = -1/3
    const bool slope_ok = !threw && std::abs(c23.fitted_rate + 1.0 / 3.0) <= 0.05 / 3.0;
    return {symbolic22 && symbolic23 && log_ok && slope_ok,
            fmt("x^2+y^2: symbolic %s, fitted log coefficient %.5f vs -0.5; x^2+y^3: symbolic bidegree %s, "
                "fitted slope %.5f vs -1/3 (tol 5%%)",
                symbolic22 ? "ok" : "WRONG", c22.fitted_rate, symbolic23 ? "(-1/6,-1/6)" : "WRONG",
                c23.fitted_rate)};
}

// 8. kappa against the Gamma-ratio prefactor at the pole.
Outcome prefactor_identity() {
    std::mt19937_64 rng(kSeed + 8);
    std::uniform_int_distribution<int> index(0, 4), den(2, 12), nu_dist(0, 3);
    int passed = 0;
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const int q = den(rng);
        const Rational r(-std::uniform_int_distribution<int>(1, q - 1)(rng), q);
        const int m1 = index(rng), m2 = index(rng), nu = nu_dist(rng);
        const double error = relative(fourier::kappa(r, m1, m2), fourier::pole_prefactor(r, m1, m2, nu));
        worst = std::max(worst, error);
        if (error <= 1e-10) ++passed;
    }
    return {passed == 200, fmt("%d/200 draws, max relative error %.3g (tol 1e-10)", passed, worst)};
}

bool bit_identical(const Expansion& a, const Expansion& b) {
    if (a.side() != b.side() || a.size() != b.size()) return false;
    auto it = b.terms().begin();
    for (const auto& [ex, p] : a.terms()) {
        if (!(ex == it->first) || p.terms().size() != it->second.terms().size()) return false;
        auto jt = it->second.terms().begin();
        for (const auto& [k, c] : p.terms()) {
            if (k != jt->first || std::memcmp(&c, &jt->second, sizeof c) != 0) return false;
            ++jt;
        }
        ++it;
    }
    return true;
}

// 9. Transform round trips and print/parse.
Outcome round_trips() {
    std::mt19937_64 rng(kSeed + 9);
    int fi = 0, if_ = 0, text = 0;
    for (int i = 0; i < 500; ++i) {
        const auto e = random_fiber_expansion(rng);
        if (approx_equal(fourier::inverse(fourier::forward(e)), mod_smooth(e), 1e-9)) ++fi;
        const auto h = random_hat_expansion(rng);
        if (approx_equal(fourier::forward(fourier::inverse(h)), h, 1e-9)) ++if_;
        if (bit_identical(parse_expansion(format_expansion(e)), e) &&
            bit_identical(parse_expansion(format_expansion(h)), h))
            ++text;
    }
    std::string cli = "CLI not built";
    bool cli_ok = true;
#ifdef NM_ACCEPTANCE_CLI
    int cli_passed = 0;
    const auto path = (std::filesystem::path(NM_ACCEPTANCE_TMPDIR) / "roundtrip.exp").string();
    for (int i = 0; i < 100; ++i) {
        const auto e = random_fiber_expansion(rng);
        std::ofstream(path) << format_expansion(e);
        std::ostringstream out, err;
        if (cli::run({"fourier", path}, out, err) != 0) continue;
        const auto printed = parse_expansion(out.str());
        if (bit_identical(printed, fourier::forward(e)) && format_expansion(printed) == out.str()) ++cli_passed;
    }
    cli_ok = cli_passed == 100;
    cli = fmt("CLI output reparsed bit-exact %d/100", cli_passed);
#endif
    return {fi == 500 && if_ == 500 && text == 500 && cli_ok,
            fmt("inverse(forward) %d/500, forward(inverse) %d/500 (tol 1e-9), print/parse bit-exact %d/500, ", fi,
                if_, text) +
                cli};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
        {"main theorem on random pairs", main_theorem},
        {"forward polygon identity", forward_polygon},
        {"Minkowski vertex decomposition", minkowski_lemma},
        {"Mellin coefficients vs contour extraction", mellin_agreement},
        {"Bessel-Mellin identities", bessel_mellin},
        {"numeric Fourier asymptotics", fourier_asymptotics},
        {"x^2+y^2 and x^2+y^3 demos", convolution_demo},
        {"kappa vs pole prefactor", prefactor_identity},
        {"round trips", round_trips},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && outcome.pass;
        std::printf("criterion %zu [%s] %s: %s (%.1fs)\n", i + 1, outcome.pass ? "PASS" : "FAIL", criteria[i].first,
                    outcome.detail.c_str(), seconds);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
