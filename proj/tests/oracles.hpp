#pragma once

// Test-only brute-force oracles, independent of the library's production
// paths: everything here works from first definitions (trial division,
// full enumeration, sorting), deliberately ignoring efficiency.

#include <algorithm>
#include <cmath>
#include <vector>

#include "fm/fraction.hpp"

namespace oracle {

using fm::i64;
using fm::i128;

inline std::vector<i64> divisors_brute(i64 n) {
    std::vector<i64> d;
    for (i64 k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

inline i64 mobius_brute(i64 n) {
    i64 k = 0;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++k;
        }
    }
    if (n > 1) ++k;
    return k % 2 == 0 ? 1 : -1;
}

inline i64 totient_brute(i64 n) {
    i64 count = 0;
    for (i64 a = 1; a <= n; ++a)
        if (std::gcd(a, n) == 1) ++count;
    return count;
}

inline double mangoldt_brute(i64 n) {
    if (n < 2) return 0.0;
    i64 p = 0;
    for (i64 q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            p = q;
            break;
        }
    if (p == 0) return std::log(static_cast<double>(n));  // n prime
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

inline i64 mertens_brute(i64 x) {
    i64 m = 0;
    for (i64 n = 1; n <= x; ++n) m += mobius_brute(n);
    return m;
}

// All of F_x by gcd enumeration and sorting; excludes 0/1, includes 1/1.
inline std::vector<fm::Fraction> farey_brute(i64 x) {
    std::vector<fm::Fraction> seq;
    for (i64 b = 1; b <= x; ++b)
        for (i64 a = 1; a <= b; ++a)
            if (std::gcd(a, b) == 1) seq.emplace_back(a, b);
    std::sort(seq.begin(), seq.end());
    return seq;
}

// Determinant by expansion along the first row; fine for n <= 8.
inline i64 det_brute(const std::vector<i64>& m, i64 n) {
    if (n == 1) return m[0];
    i64 acc = 0;
    for (i64 col = 0; col < n; ++col) {
        if (m[static_cast<size_t>(col)] == 0) continue;
        std::vector<i64> minor;
        minor.reserve(static_cast<size_t>((n - 1) * (n - 1)));
        for (i64 i = 1; i < n; ++i)
            for (i64 j = 0; j < n; ++j)
                if (j != col) minor.push_back(m[static_cast<size_t>(i * n + j)]);
        i64 t = det_brute(minor, n - 1);
        acc += m[static_cast<size_t>(col)] * (col % 2 == 0 ? t : -t);
    }
    return acc;
}

}  // namespace oracle
