#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cfit {

// Exact reduced fraction: gcd(|num|, den) == 1 and den >= 1 always hold.
// Intermediates run through 128-bit arithmetic; a result that does not fit
// back into 64 bits throws std::overflow_error instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(long long value) : num_(value) {}
    Rational(long long num, long long den);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    std::string str() const;

    // Accepts "p/q" or "p" with an optional leading minus on p; q must be a
    // positive integer.
    static Rational parse(std::string_view text);

    Rational operator-() const { return with_raw(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static Rational make(__int128 num, __int128 den);
    static Rational with_raw(long long num, long long den);

    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace cfit
