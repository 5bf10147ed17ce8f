#include "newton_mellin/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "newton_mellin/error.hpp"

namespace nm {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

double parse_double(std::string_view text, int line) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError(line, "malformed number '" + std::string(text) + "'");
    }
    return value;
}

std::string_view expect_key(std::string_view token, std::string_view key, int line) {
    if (token.size() <= key.size() || token.substr(0, key.size()) != key || token[key.size()] != '=') {
        throw ParseError(line, "expected '" + std::string(key) + "=...', found '" + std::string(token) + "'");
    }
    return token.substr(key.size() + 1);
}

template <class F>
auto with_line(int line, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(line, e.what());
    }
}

void parse_term(std::string_view body, int line, Expansion& out) {
    const auto colon = body.find(':');
    if (colon == std::string_view::npos) throw ParseError(line, "missing ':' between exponent and coefficients");
    const auto head = split_ws(body.substr(0, colon));
    if (head.size() != 3) throw ParseError(line, "exponent must be 'r=<p/q> m1=<int> m2=<int>'");

    const Rational r = with_line(line, [&] { return Rational::parse(expect_key(head[0], "r", line)); });
    const Rational m1 = with_line(line, [&] { return Rational::parse(expect_key(head[1], "m1", line)); });
    const Rational m2 = with_line(line, [&] { return Rational::parse(expect_key(head[2], "m2", line)); });
    if (!m1.is_integer() || !m2.is_integer()) throw ParseError(line, "m1 and m2 must be integers");

    std::map<int, Complex> coeffs;
    const auto items = split_ws(body.substr(colon + 1));
    if (items.empty()) throw ParseError(line, "no coefficients after ':'");
    for (const auto item : items) {
        const auto k_sep = item.find(':');
        const auto c_sep = item.find(',');
        if (k_sep == std::string_view::npos || c_sep == std::string_view::npos || c_sep < k_sep) {
            throw ParseError(line, "coefficient must be '<k>:<re>,<im>', found '" + std::string(item) + "'");
        }
        int k = 0;
        const auto k_text = item.substr(0, k_sep);
        const auto [ptr, ec] = std::from_chars(k_text.data(), k_text.data() + k_text.size(), k);
        if (ec != std::errc() || ptr != k_text.data() + k_text.size() || k < 0) {
            throw ParseError(line, "malformed log degree '" + std::string(k_text) + "'");
        }
        const double re = parse_double(item.substr(k_sep + 1, c_sep - k_sep - 1), line);
        const double im = parse_double(item.substr(c_sep + 1), line);
        coeffs[k] += Complex{re, im};
    }
    with_line(line, [&] {
        out.add_term(canonicalize(r, m1.num(), m2.num()), LogPolynomial(std::move(coeffs)));
        return 0;
    });
}

}  // namespace

std::string format_number(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::string format_complex(std::complex<double> value) {
    return format_number(value.real()) + "," + format_number(value.imag());
}

Expansion parse_expansion(std::istream& in) {
    std::optional<Expansion> out;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto text = trim(raw);
        if (text.empty() || text.front() == '#') continue;
        if (!out) {
            if (text == "side=zero") {
                out.emplace(Side::AtZero);
            } else if (text == "side=infinity") {
                out.emplace(Side::AtInfinity);
            } else {
                throw ParseError(line, "expected header 'side=zero' or 'side=infinity'");
            }
            continue;
        }
        if (text.starts_with("side=")) throw ParseError(line, "duplicate side header");
        parse_term(text, line, *out);
    }
    if (!out) throw ParseError(line + 1, "missing 'side=' header");
    return *out;
}

Expansion parse_expansion(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_expansion(in);
}

void write_expansion(std::ostream& out, const Expansion& e) {
    out << "side=" << to_string(e.side()) << '\n';
    for (const auto& [ex, poly] : e.terms()) {
        out << "r=" << ex.r.str() << " m1=" << ex.m1 << " m2=" << ex.m2 << " :";
        for (const auto& [k, c] : poly.terms()) out << ' ' << k << ':' << format_complex(c);
        out << '\n';
    }
}

std::string format_expansion(const Expansion& e) {
    std::ostringstream out;
    write_expansion(out, e);
    return out.str();
}

void write_polygon(std::ostream& out, const DecoratedPolygon& polygon) {
    for (const auto& [p, d] : polygon.decorations()) {
        out << '(' << p.x.str() << ',' << p.y.str() << ") : " << format_complex(d.coefficient) << " u^" << d.degree
            << '\n';
    }
}

void write_mellin_table(std::ostream& out, const MellinTable& table) {
    for (const auto& [key, entry] : table.entries()) {
        out << "r=" << key.exponent.r.str() << " m1=" << key.exponent.m1 << " m2=" << key.exponent.m2
            << " k=" << key.k << " c=" << format_complex(entry.raw) << " C=" << format_complex(entry.normalized)
            << '\n';
    }
}

}  // namespace nm
