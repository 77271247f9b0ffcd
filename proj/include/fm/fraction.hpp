#pragma once

// Reduced rational in [0, 1]: the Farey sequence element.

#include "fm/common.hpp"

namespace fm {

struct Fraction {
    i64 num = 0;
    i64 den = 1;

    Fraction() = default;

    Fraction(i64 n, i64 d) : num(n), den(d) {
        if (den < 1) throw std::invalid_argument("Fraction: denominator must be positive");
        if (num < 0 || num > den) throw std::invalid_argument("Fraction: value outside [0, 1]");
        i64 g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
    }
    friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
};

}  // namespace fm
