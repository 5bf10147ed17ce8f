#include "newton_mellin/expansion.hpp"

#include <algorithm>
#include <cmath>

#include "newton_mellin/error.hpp"

namespace nm {
namespace {

Complex integer_power(Complex base, std::int64_t n) {
    if (n < 0) return 1.0 / integer_power(base, -n);
    Complex out{1.0, 0.0};
    for (; n > 0; n >>= 1) {
        if (n & 1) out *= base;
        base *= base;
    }
    return out;
}

}  // namespace

LogPolynomial::LogPolynomial(std::map<int, Complex> coefficients) : coeffs_(std::move(coefficients)) {
    for (const auto& [k, c] : coeffs_) {
        if (k < 0) throw DomainError("negative log degree " + std::to_string(k));
    }
    prune();
}

LogPolynomial LogPolynomial::monomial(Complex coefficient, int degree) {
    return LogPolynomial({{degree, coefficient}});
}

Complex LogPolynomial::coefficient(int k) const {
    const auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Complex{} : it->second;
}

Complex LogPolynomial::leading() const { return coeffs_.empty() ? Complex{} : coeffs_.rbegin()->second; }

Complex LogPolynomial::operator()(Complex u) const {
    Complex value{};
    Complex power{1.0, 0.0};
    int last = 0;
    for (const auto& [k, c] : coeffs_) {
        for (; last < k; ++last) power *= u;
        value += c * power;
    }
    return value;
}

LogPolynomial& LogPolynomial::operator+=(const LogPolynomial& rhs) {
    for (const auto& [k, c] : rhs.coeffs_) coeffs_[k] += c;
    prune();
    return *this;
}

LogPolynomial& LogPolynomial::operator*=(Complex scalar) {
    for (auto& [k, c] : coeffs_) c *= scalar;
    prune();
    return *this;
}

LogPolynomial operator*(const LogPolynomial& lhs, const LogPolynomial& rhs) {
    std::map<int, Complex> out;
    for (const auto& [i, a] : lhs.coeffs_) {
        for (const auto& [j, b] : rhs.coeffs_) out[i + j] += a * b;
    }
    return LogPolynomial(std::move(out));
}

void LogPolynomial::prune() {
    double largest = 1.0;
    for (const auto& [k, c] : coeffs_) largest = std::max(largest, std::abs(c));
    const double threshold = kPruneRelative * largest;
    std::erase_if(coeffs_, [threshold](const auto& kv) { return !(std::abs(kv.second) >= threshold); });
}

const char* to_string(Side side) noexcept { return side == Side::AtZero ? "zero" : "infinity"; }

Exponent Exponent::make(const Rational& r, std::int64_t m1, std::int64_t m2) {
    if (!(r > Rational(-1) && r <= Rational(0))) {
        throw DomainError("exponent r = " + r.str() + " outside (-1, 0]");
    }
    return Exponent{r, m1, m2};
}

std::strong_ordering operator<=>(const Exponent& lhs, const Exponent& rhs) {
    if (const auto c = lhs.x() <=> rhs.x(); c != 0) return c;
    return lhs.y() <=> rhs.y();
}

Exponent canonicalize(const Rational& rho, std::int64_t a, std::int64_t b) {
    const std::int64_t nu = rho.ceil();
    std::int64_t m1 = 0;
    std::int64_t m2 = 0;
    if (__builtin_add_overflow(a, nu, &m1) || __builtin_add_overflow(b, nu, &m2)) {
        throw OverflowError("exponent index overflow");
    }
    return Exponent{rho - Rational(nu), m1, m2};
}

Expansion::Expansion(Side side, TermMap terms) : side_(side) {
    for (const auto& [e, p] : terms) add_term(Exponent::make(e.r, e.m1, e.m2), p);
}

const LogPolynomial& Expansion::at(const Exponent& e) const {
    static const LogPolynomial zero;
    const auto it = terms_.find(e);
    return it == terms_.end() ? zero : it->second;
}

void Expansion::add_term(const Exponent& e, const LogPolynomial& poly) {
    if (poly.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, poly);
    if (!inserted) {
        it->second += poly;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Expansion accumulate(const Expansion& target, Complex scalar, const Expansion& source) {
    if (target.side() != source.side()) throw DomainError("accumulate: side mismatch");
    Expansion out = target;
    if (scalar == Complex{}) return out;
    for (const auto& [e, p] : source.terms()) out.add_term(e, p * scalar);
    return out;
}

Expansion multiply(const Expansion& lhs, const Expansion& rhs) {
    if (lhs.side() != rhs.side()) throw DomainError("multiply: side mismatch");
    Expansion out(lhs.side());
    for (const auto& [e1, p1] : lhs.terms()) {
        for (const auto& [e2, p2] : rhs.terms()) {
            std::int64_t a = 0;
            std::int64_t b = 0;
            if (__builtin_add_overflow(e1.m1, e2.m1, &a) || __builtin_add_overflow(e1.m2, e2.m2, &b)) {
                throw OverflowError("exponent index overflow");
            }
            out.add_term(canonicalize(e1.r + e2.r, a, b), p1 * p2);
        }
    }
    return out;
}

Expansion mod_smooth(const Expansion& e) {
    if (e.side() != Side::AtZero) throw DomainError("mod_smooth: expansion is not on the zero side");
    Expansion out(Side::AtZero);
    for (const auto& [ex, p] : e.terms()) {
        if (ex.r.is_zero() && ex.m1 >= 0 && ex.m2 >= 0) {
            auto coeffs = p.terms();
            coeffs.erase(0);
            out.add_term(ex, LogPolynomial(std::move(coeffs)));
        } else {
            out.add_term(ex, p);
        }
    }
    return out;
}

bool is_fiber_class(const Expansion& e) {
    if (e.side() != Side::AtZero) return false;
    return std::ranges::all_of(e.terms(), [](const auto& kv) { return kv.first.m1 >= 0 && kv.first.m2 >= 0; });
}

Complex evaluate(const Expansion& e, Complex t) {
    const double modulus = std::abs(t);
    if (modulus == 0.0) throw DomainError("evaluate: t must be nonzero");
    const double log_modulus = std::log(modulus);
    Complex value{};
    for (const auto& [ex, p] : e.terms()) {
        const Complex monomial = std::pow(modulus, 2.0 * ex.r.to_double()) * integer_power(t, ex.m1) *
                                 integer_power(std::conj(t), ex.m2);
        value += p(Complex{log_modulus, 0.0}) * monomial;
    }
    return value;
}

bool approx_equal(const Expansion& lhs, const Expansion& rhs, double rel_tol) {
    if (lhs.side() != rhs.side() || lhs.size() != rhs.size()) return false;
    for (auto a = lhs.terms().begin(), b = rhs.terms().begin(); a != lhs.terms().end(); ++a, ++b) {
        if (!(a->first == b->first)) return false;
        const auto& pa = a->second.terms();
        const auto& pb = b->second.terms();
        if (pa.size() != pb.size()) return false;
        for (auto ca = pa.begin(), cb = pb.begin(); ca != pa.end(); ++ca, ++cb) {
            if (ca->first != cb->first) return false;
            const double scale = std::max(std::abs(ca->second), std::abs(cb->second));
            if (std::abs(ca->second - cb->second) > rel_tol * scale) return false;
        }
    }
    return true;
}

}  // namespace nm
