#pragma once

// Shared integer helpers: wide-integer aliases, an exact small rational,
// and iteration over floor-quotient blocks (maximal runs of i on which
// floor(x/i) is constant; there are O(sqrt(x)) of them).

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fm {

using i64 = long long;
using i128 = __int128_t;

// Exact rational, kept reduced with positive denominator.
// Used for Farey values, corollary sums and claimed value sets, where
// set membership requires exact equality.
struct Ratio {
    i64 num = 0;
    i64 den = 1;

    Ratio() = default;
    Ratio(i64 n) : num(n) {}  // NOLINT: implicit from integers is intended
    Ratio(i64 n, i64 d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::invalid_argument("Ratio: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend Ratio operator+(const Ratio& a, const Ratio& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend Ratio operator-(const Ratio& a, const Ratio& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend Ratio operator*(const Ratio& a, const Ratio& b) { return {a.num * b.num, a.den * b.den}; }
    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Ratio& a, const Ratio& b) {
        return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
    }
};

// Calls fn(v, lo, hi) for each maximal block [lo, hi] of i in [1, x]
// with floor(x/i) == v, in increasing i order.
template <typename F>
void for_each_quotient_block(i64 x, F&& fn) {
    for (i64 lo = 1; lo <= x;) {
        i64 v = x / lo;
        i64 hi = x / v;
        fn(v, lo, hi);
        lo = hi + 1;
    }
}

}  // namespace fm
