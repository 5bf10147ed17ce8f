#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace nm {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always stored reduced with a positive denominator. Every operation
/// whose reduced result does not fit in 64 bits throws OverflowError.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    bool is_zero() const noexcept { return num_ == 0; }
    std::int64_t floor() const;
    std::int64_t ceil() const;
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Always `p/q`, also for integers (`3/1`, `0/1`).
    std::string str() const;

    /// Accepts `p/q` or a bare integer `p`; surrounding whitespace is not allowed.
    static Rational parse(std::string_view text);

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
    static Rational from_wide(__int128 numerator, __int128 denominator);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace nm
