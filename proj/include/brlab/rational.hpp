#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace brlab {

/// Exact rational arithmetic on int64 with __int128 intermediates; throws on
/// overflow instead of silently losing exactness.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    static Rat reduce128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        constexpr __int128 lim = __int128(INT64_MAX);
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("Rat: overflow");
        Rat r; r.num = (long long)n; r.den = (long long)d;
        return r;
    }

    /// Exact conversion of a double (every finite double is a dyadic rational);
    /// throws if the reduced form exceeds int64.
    static Rat from_double(double x);
    double to_double() const { return double(num) / double(den); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return reduce128(__int128(a.num) * b.den + __int128(b.num) * a.den,
                         __int128(a.den) * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return reduce128(__int128(a.num) * b.den - __int128(b.num) * a.den,
                         __int128(a.den) * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return reduce128(__int128(a.num) * b.num, __int128(a.den) * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("Rat: division by zero");
        return reduce128(__int128(a.num) * b.den, __int128(a.den) * b.num);
    }
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rat& a, const Rat& b) {
        return __int128(a.num) * b.den < __int128(b.num) * a.den;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace brlab
