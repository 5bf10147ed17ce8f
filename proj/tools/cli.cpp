#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "newton_mellin/error.hpp"
#include "newton_mellin/fourier.hpp"
#include "newton_mellin/io.hpp"
#include "newton_mellin/mellin.hpp"
#include "newton_mellin/oracle/convolution.hpp"
#include "svg.hpp"
#include "verify.hpp"

namespace nm::cli {
namespace {

using nlohmann::json;

struct Options {
    bool tilde = false;
    bool inverse = false;
    bool as_json = false;
    std::string svg_path;
    std::optional<double> tol;
    std::optional<double> sigma;
    std::optional<double> cutoff_inner;
    std::optional<double> cutoff_outer;
    std::optional<std::uint64_t> seed;
};

// Input problems that should exit with status 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json complex_json(Complex c) { return json{{"re", c.real()}, {"im", c.imag()}}; }

json expansion_json(const Expansion& e) {
    json terms = json::array();
    for (const auto& [ex, poly] : e.terms()) {
        json coeffs = json::array();
        for (const auto& [k, c] : poly.terms()) coeffs.push_back({{"k", k}, {"re", c.real()}, {"im", c.imag()}});
        terms.push_back({{"r", ex.r.str()}, {"m1", ex.m1}, {"m2", ex.m2}, {"coefficients", coeffs}});
    }
    return json{{"side", to_string(e.side())}, {"terms", terms}};
}

json polygon_json(const DecoratedPolygon& p) {
    json vertices = json::array();
    for (const auto& v : p.polygon().vertices()) {
        const auto& d = p.decoration(v);
        vertices.push_back({{"x", v.x.str()},
                            {"y", v.y.str()},
                            {"re", d.coefficient.real()},
                            {"im", d.coefficient.imag()},
                            {"degree", d.degree}});
    }
    return json{{"vertices", vertices}};
}

json mellin_json(const MellinTable& table) {
    json entries = json::array();
    for (const auto& [key, entry] : table.entries()) {
        entries.push_back({{"r", key.exponent.r.str()},
                           {"m1", key.exponent.m1},
                           {"m2", key.exponent.m2},
                           {"k", key.k},
                           {"c", complex_json(entry.raw)},
                           {"C", complex_json(entry.normalized)}});
    }
    return json{{"entries", entries}};
}

json report_json(const SuiteReport& report) {
    json cases = json::array();
    for (const auto& c : report.cases) {
        cases.push_back({{"case", c.name},
                         {"numeric", complex_json(c.numeric)},
                         {"predicted", complex_json(c.predicted)},
                         {"relative_error", c.error},
                         {"pass", c.pass}});
    }
    return json{{"suite", report.suite}, {"tolerance", report.tolerance}, {"cases", cases}, {"pass", report.pass()}};
}

Expansion load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return parse_expansion(in);
    } catch (const nm::ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_svg(const Options& options, const std::vector<SvgLayer>& layers, const std::string& title) {
    if (options.svg_path.empty()) return;
    std::ofstream out(options.svg_path);
    if (!out) throw InputError("cannot write '" + options.svg_path + "'");
    out << render_svg(layers, title);
}

void write_svg(const Options& options, const DecoratedPolygon& polygon, const std::string& title) {
    write_svg(options, std::vector<SvgLayer>{{polygon, {}}}, title);
}

oracle::Cutoff cutoff_from(const Options& options) {
    oracle::Cutoff cutoff;
    if (options.cutoff_inner) cutoff.inner = *options.cutoff_inner;
    if (options.cutoff_outer) cutoff.outer = *options.cutoff_outer;
    cutoff.validate();
    return cutoff;
}

int do_polygon(const Options& options, const std::string& path, std::ostream& out) {
    const auto e = load(path);
    const auto polygon = options.tilde ? fourier::tilde_polygon(e) : fourier::hat_polygon(e);
    if (options.as_json) {
        out << polygon_json(polygon).dump(2) << '\n';
    } else {
        write_polygon(out, polygon);
    }
    write_svg(options, polygon, options.tilde ? "tilde polygon" : "hat polygon");
    return kExitOk;
}

int do_mellin(const Options& options, const std::string& path, std::ostream& out) {
    const auto table = mellin_coefficients(load(path));
    if (options.as_json) {
        out << mellin_json(table).dump(2) << '\n';
    } else {
        write_mellin_table(out, table);
    }
    if (!options.svg_path.empty()) write_svg(options, nm_decorated_polygon(table), "Newton-Mellin polygon");
    return kExitOk;
}

int do_fourier(const Options& options, const std::string& path, std::ostream& out) {
    const auto e = load(path);
    const auto image = options.inverse ? fourier::inverse(e) : fourier::forward(e);
    if (options.as_json) {
        out << expansion_json(image).dump(2) << '\n';
    } else {
        write_expansion(out, image);
    }
    if (!options.svg_path.empty()) write_svg(options, fourier::tilde_polygon(image), "transform");
    return kExitOk;
}

int report_ts(const Options& options, const Expansion& e1, const Expansion& e2, std::ostream& out,
              json* extra = nullptr) {
    const double tol = options.tol.value_or(fourier::kDecorationTolerance);
    const auto combined = fourier::thom_sebastiani(e1, e2);
    const auto report = fourier::theorem_check(e1, e2, tol);
    if (options.as_json) {
        json j{{"combination", expansion_json(combined)},
               {"lhs", polygon_json(report.lhs)},
               {"rhs", polygon_json(report.rhs)},
               {"max_coefficient_deviation", report.max_coefficient_deviation},
               {"verdict", report.verdict ? "PASS" : "FAIL"}};
        if (extra) j.update(*extra);
        out << j.dump(2) << '\n';
    } else {
        out << "combination:\n";
        write_expansion(out, combined);
        out << "lhs (hat polygon of the combination):\n";
        write_polygon(out, report.lhs);
        out << "rhs (sum of hat polygons + (1,1)):\n";
        write_polygon(out, report.rhs);
        out << "max coefficient deviation: " << format_number(report.max_coefficient_deviation) << '\n';
        out << "verdict: " << (report.verdict ? "PASS" : "FAIL") << '\n';
    }
    if (!options.svg_path.empty()) {
        write_svg(options,
                  {{report.lhs, "combination"},
                   {fourier::hat_polygon(e1), "first input"},
                   {fourier::hat_polygon(e2), "second input"}},
                  "Thom-Sebastiani combination");
    }
    return report.verdict ? kExitOk : kExitFailed;
}

int do_ts(const Options& options, const std::vector<std::string>& paths, std::ostream& out) {
    if (paths.size() != 2) throw InputError("ts takes exactly two expansion files");
    return report_ts(options, load(paths[0]), load(paths[1]), out);
}

int do_verify(const Options& options, const std::string& suite, std::ostream& out) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) throw InputError("unknown suite '" + suite + "'");
    SuiteOptions suite_options;
    suite_options.tol = options.tol;
    if (options.sigma) suite_options.sigma = *options.sigma;
    suite_options.cutoff = cutoff_from(options);
    if (options.seed) suite_options.seed = *options.seed;
    const auto report = run_suite(suite, suite_options);
    if (options.as_json) {
        out << report_json(report).dump(2) << '\n';
    } else {
        out << "suite " << report.suite << " (tolerance " << format_number(report.tolerance) << ")\n";
        out << "case | numeric | predicted | relative error | result\n";
        for (const auto& c : report.cases) {
            out << c.name << " | " << format_complex(c.numeric) << " | " << format_complex(c.predicted) << " | "
                << format_number(c.error) << " | " << (c.pass ? "pass" : "FAIL") << '\n';
        }
        const auto failed = std::count_if(report.cases.begin(), report.cases.end(), [](const auto& c) { return !c.pass; });
        out << report.cases.size() - static_cast<std::size_t>(failed) << '/' << report.cases.size() << " passed\n";
    }
    return report.pass() ? kExitOk : kExitFailed;
}

int do_demo(const Options& options, const std::vector<std::string>& args, std::ostream& out) {
    if (args.size() != 3 || args[0] != "monomial") throw InputError("usage: demo monomial <a> <b>");
    int a = 0, b = 0;
    try {
        std::size_t used_a = 0, used_b = 0;
        a = std::stoi(args[1], &used_a);
        b = std::stoi(args[2], &used_b);
        if (used_a != args[1].size() || used_b != args[2].size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw InputError("demo monomial: exponents must be integers");
    }
    if (a < 1 || a > 4 || b < 1 || b > 4) throw InputError("demo monomial: exponents must be in 1..4");

    const auto e1 = oracle::monomial_expansion({a});
    const auto e2 = oracle::monomial_expansion({b});
    const auto check = oracle::convolution_check({a}, {b}, options.tol.value_or(0.05), 0.1, cutoff_from(options));

    json extra{{"convolution",
                {{"kind", oracle::to_string(check.kind)},
                 {"predicted_rate", check.predicted_rate},
                 {"fitted_rate", check.fitted_rate},
                 {"predicted_coefficient", check.predicted_coefficient},
                 {"fitted_coefficient", check.fitted_coefficient},
                 {"deviation", check.deviation},
                 {"pass", check.pass}}}};
    if (!options.as_json) {
        out << "x^" << a << " density (singular part):\n";
        write_expansion(out, e1);
        out << "y^" << b << " density (singular part):\n";
        write_expansion(out, e2);
    }
    const int status = report_ts(options, e1, e2, out, &extra);
    if (!options.as_json) {
        out << "convolution check (" << oracle::to_string(check.kind) << "): ";
        switch (check.kind) {
            case oracle::ConvolutionCheck::Kind::Smooth:
                out << "value at 0 " << format_number(check.fitted_coefficient);
                break;
            case oracle::ConvolutionCheck::Kind::Logarithmic:
                out << "log coefficient fitted " << format_number(check.fitted_rate) << ", predicted "
                    << format_number(check.predicted_rate);
                break;
            case oracle::ConvolutionCheck::Kind::Power:
                out << "|s| power fitted " << format_number(check.fitted_rate) << ", predicted "
                    << format_number(check.predicted_rate) << "; coefficient fitted "
                    << format_number(check.fitted_coefficient) << ", predicted "
                    << format_number(check.predicted_coefficient);
                break;
        }
        out << ", deviation " << format_number(check.deviation) << " -> " << (check.pass ? "PASS" : "FAIL") << '\n';
    }
    return status == kExitOk && check.pass ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decorated Newton polygons, Mellin coefficients and local Fourier transforms", "newton-mellin"};
    app.require_subcommand(1);
    Options options;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", options.as_json, "Structured output");
        sub->add_option("--svg", options.svg_path, "Write an SVG drawing of the polygon");
        sub->add_option("--tol", options.tol, "Override the default tolerance");
        sub->add_option("--sigma", options.sigma, "|sigma| for the hat suite");
        sub->add_option("--cutoff-inner", options.cutoff_inner, "Cutoff plateau radius");
        sub->add_option("--cutoff-outer", options.cutoff_outer, "Cutoff support radius");
        sub->add_option("--seed", options.seed, "Seed for random property suites");
    };

    std::string input;
    std::vector<std::string> inputs;
    std::string suite;
    std::vector<std::string> demo_args;

    auto* polygon = app.add_subcommand("polygon", "Print the hat polygon of an expansion");
    polygon->add_option("file", input, "Expansion file")->required();
    polygon->add_flag("--tilde", options.tilde, "Print the plain decorated polygon instead");
    add_common(polygon);

    auto* mellin = app.add_subcommand("mellin", "Print the Mellin coefficient table");
    mellin->add_option("file", input, "Expansion file")->required();
    add_common(mellin);

    auto* fourier_cmd = app.add_subcommand("fourier", "Print the local Fourier transform");
    fourier_cmd->add_option("file", input, "Expansion file")->required();
    fourier_cmd->add_flag("--inverse", options.inverse, "Apply the inverse transform");
    add_common(fourier_cmd);

    auto* ts = app.add_subcommand("ts", "Thom-Sebastiani combination and theorem check");
    ts->add_option("files", inputs, "Two expansion files")->required()->expected(2);
    add_common(ts);

    auto* verify = app.add_subcommand("verify", "Run a numerical verification suite");
    verify->add_option("suite", suite, "bessel | mellin | hat | ts | gamma")->required();
    add_common(verify);

    auto* demo = app.add_subcommand("demo", "demo monomial <a> <b>: x^a + y^b end to end");
    demo->add_option("args", demo_args, "monomial <a> <b>")->required();
    add_common(demo);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    try {
        if (polygon->parsed()) return do_polygon(options, input, out);
        if (mellin->parsed()) return do_mellin(options, input, out);
        if (fourier_cmd->parsed()) return do_fourier(options, input, out);
        if (ts->parsed()) return do_ts(options, inputs, out);
        if (verify->parsed()) return do_verify(options, suite, out);
        if (demo->parsed()) return do_demo(options, demo_args, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const ConvergenceError& e) {
        err << "verification error: " << e.what() << '\n';
        return kExitFailed;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitInputError;
}

}  // namespace nm::cli
