#include "clusterfit/rational.hpp"

#include <charconv>
#include <limits>

namespace cfit {

namespace {

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

unsigned __int128 abs128(__int128 v) {
    return v < 0 ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
}

long long parse_int(std::string_view text, std::string_view whole) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad rational: '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Rational::Rational(long long num, long long den) {
    *this = make(num, den);
}

Rational Rational::with_raw(long long num, long long den) {
    Rational r;
    r.num_ = num;
    r.den_ = den;
    return r;
}

Rational Rational::make(__int128 num, __int128 den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        return with_raw(0, 1);
    }
    unsigned __int128 g = gcd128(abs128(num), abs128(den));
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
    constexpr __int128 lo = std::numeric_limits<long long>::min();
    constexpr __int128 hi = std::numeric_limits<long long>::max();
    if (num < lo || num > hi || den > hi) {
        throw std::overflow_error("rational out of 64-bit range after reduction");
    }
    return with_raw(static_cast<long long>(num), static_cast<long long>(den));
}

std::string Rational::str() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("bad rational: empty string");
    }
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text, text));
    }
    long long num = parse_int(text.substr(0, slash), text);
    std::string_view den_part = text.substr(slash + 1);
    if (den_part.empty() || den_part.front() == '-' || den_part.front() == '+') {
        throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
    }
    long long den = parse_int(den_part, text);
    if (den <= 0) {
        throw std::invalid_argument("bad rational: denominator must be positive in '" +
                                    std::string(text) + "'");
    }
    return Rational(num, den);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                          static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational::make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                          static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::make(static_cast<__int128>(a.num_) * b.num_,
                          static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    return Rational::make(static_cast<__int128>(a.num_) * b.den_,
                          static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace cfit
