#include "newton_mellin/rational.hpp"

#include <charconv>
#include <limits>

#include "newton_mellin/error.hpp"

namespace nm {
namespace {

__int128 wide_abs(__int128 v) { return v < 0 ? -v : v; }

__int128 wide_gcd(__int128 a, __int128 b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(__int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) throw OverflowError("integer out of 64-bit range: " + std::string(text));
    if (ec != std::errc() || ptr != last || first == last) throw DomainError("not an integer: '" + std::string(text) + "'");
    return value;
}

}  // namespace

Rational::Rational(std::int64_t value) : num_(value), den_(1) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(__int128 numerator, __int128 denominator) {
    if (denominator == 0) throw DomainError("rational with zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const __int128 g = wide_gcd(numerator, denominator);
    if (g > 1) {
        numerator /= g;
        denominator /= g;
    }
    if (!fits(numerator) || !fits(denominator)) throw OverflowError("rational arithmetic overflow");
    Rational out;
    out.num_ = static_cast<std::int64_t>(numerator);
    out.den_ = static_cast<std::int64_t>(denominator);
    return out;
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const auto p = parse_int(text.substr(0, slash));
    const auto q = parse_int(text.substr(slash + 1));
    return Rational(p, q);
}

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
    const __int128 n = static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_;
    const __int128 d = static_cast<__int128>(den_) * rhs.den_;
    return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& rhs) {
    const __int128 n = static_cast<__int128>(num_) * rhs.den_ - static_cast<__int128>(rhs.num_) * den_;
    const __int128 d = static_cast<__int128>(den_) * rhs.den_;
    return *this = from_wide(n, d);
}

Rational& Rational::operator*=(const Rational& rhs) {
    return *this = from_wide(static_cast<__int128>(num_) * rhs.num_, static_cast<__int128>(den_) * rhs.den_);
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw DomainError("rational division by zero");
    return *this = from_wide(static_cast<__int128>(num_) * rhs.den_, static_cast<__int128>(den_) * rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const __int128 a = static_cast<__int128>(lhs.num_) * rhs.den_;
    const __int128 b = static_cast<__int128>(rhs.num_) * lhs.den_;
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace nm
