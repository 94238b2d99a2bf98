#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "specon/common.hpp"

namespace specon {

// exact rational with int64 storage, always normalized: den > 0, gcd(num,den) == 1
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rational() = default;

    Rational(std::int64_t n, std::int64_t d = 1) {
        if (d == 0) throw domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        num = g ? n / g : 0;
        den = g ? d / g : 1;
    }

    bool zero() const { return num == 0; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string to_string() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator-(const Rational& r) { return make(-static_cast<__int128>(r.num), r.den); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                    static_cast<__int128>(a.den) * b.den);
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw domain_error("rational division by zero");
        return make(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }

    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }

private:
    static Rational make(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const __int128 an = n < 0 ? -n : n;
        __int128 g = gcd128(an, d);
        if (g == 0) g = 1;
        n /= g;
        d /= g;
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw domain_error("rational overflow");
        Rational r;
        r.num = static_cast<std::int64_t>(n);
        r.den = d == 0 ? 1 : static_cast<std::int64_t>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
};

}  // namespace specon
