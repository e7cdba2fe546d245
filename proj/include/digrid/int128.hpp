#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace digrid {

// Exact 128-bit arithmetic for Wiener values. The degree-6 closed forms
// stay below 2^127 for m, n up to ~10^6, far beyond any grid that fits in
// memory, so no arbitrary-precision type is needed.
using int128 = __int128;

inline std::string to_string(int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    char buf[48];
    int pos = 48;
    while (u > 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    std::string s;
    if (neg) s.push_back('-');
    s.append(buf + pos, buf + 48);
    return s;
}

inline int128 parse_int128(std::string_view s) {
    std::size_t i = 0;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("empty integer literal");
    if (s.size() - i > 39) throw std::invalid_argument("integer literal too long: " + std::string(s));
    int128 v = 0;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (c < '0' || c > '9')
            throw std::invalid_argument("bad digit in integer literal: " + std::string(s));
        v = v * 10 + (c - '0');
    }
    return neg ? -v : v;
}

inline int128 binom2(int128 x) { return x < 2 ? 0 : x * (x - 1) / 2; }

inline int128 binom3(int128 x) {
    if (x < 3) return 0;
    // x(x-1)(x-2) is divisible by 6; divide stepwise to keep intermediates small.
    int128 p = x * (x - 1) / 2;
    return p * (x - 2) / 3;
}

inline int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Exact rational, normalized so that den > 0 and gcd(|num|, den) == 1.
struct Rational {
    int128 num = 0;
    int128 den = 1;

    Rational() = default;
    Rational(int128 n, int128 d) {
        if (d == 0) throw std::invalid_argument("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const int128 g = gcd128(n, d);
        num = g == 0 ? 0 : n / g;
        den = g == 0 ? 1 : d / g;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }

    std::string str() const { return to_string(num) + "/" + to_string(den); }

    // Fixed-point rendering with the given number of fraction digits,
    // rounded half away from zero.
    std::string decimal(int digits) const {
        const bool neg = num < 0;
        int128 n = neg ? -num : num;
        int128 scale = 1;
        for (int i = 0; i < digits; ++i) scale *= 10;
        const int128 scaled = (n * scale + den / 2) / den;
        std::string whole = to_string(scaled / scale);
        std::string frac = to_string(scaled % scale);
        if (digits == 0) return (neg && scaled != 0 ? "-" : "") + whole;
        frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
        return (neg && scaled != 0 ? "-" : "") + whole + "." + frac;
    }
};

}  // namespace digrid
