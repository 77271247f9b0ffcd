#pragma once

// Arbitrary-precision signed integer, base 2^32 limbs, sign-magnitude.
// Covers exactly what fraction-free elimination needs: add, subtract,
// multiply, exact division, comparison, and decimal output.

#include <cstdint>
#include <string>
#include <vector>

#include "fm/common.hpp"

namespace fm {

class BigInt {
public:
    BigInt() = default;
    BigInt(i64 v);  // NOLINT: implicit from machine integers is intended

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Quotient of an exact division; throws std::invalid_argument when the
    // remainder is nonzero or the divisor is zero.
    BigInt divided_exact(const BigInt& d) const;

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator<(const BigInt& a, const BigInt& b);

    std::string str() const;

    // Throws std::overflow_error if the value does not fit.
    i64 to_i64() const;

private:
    int sign_ = 0;                // -1, 0, +1
    std::vector<uint32_t> mag_;   // little-endian magnitude, no trailing zeros

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);  // requires a >= b
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static void divrem_mag(const std::vector<uint32_t>& u, const std::vector<uint32_t>& v,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace fm
