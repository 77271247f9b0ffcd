#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fm/bigint.hpp"

using namespace fm;

namespace {

std::string i128_str(i128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    std::string s;
    while (x != 0) {
        int digit = static_cast<int>(neg ? -(x % 10) : x % 10);
        s.push_back(static_cast<char>('0' + digit));
        x /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

}  // namespace

TEST_CASE("construction and decimal output") {
    CHECK(BigInt(0).str() == "0");
    CHECK(BigInt(-1).str() == "-1");
    CHECK(BigInt(123456789012345678).str() == "123456789012345678");
    CHECK(BigInt(INT64_MIN).str() == "-9223372036854775808");
    CHECK(BigInt(INT64_MAX).to_i64() == INT64_MAX);
    CHECK(BigInt(INT64_MIN).to_i64() == INT64_MIN);
    CHECK(BigInt(0).is_zero());
    CHECK(BigInt(0).sign() == 0);
    CHECK(BigInt(-7).sign() == -1);
}

TEST_CASE("randomized add/sub/mul against 128-bit arithmetic") {
    std::mt19937_64 rng(7);
    auto rand_i64 = [&rng]() {
        i64 v = static_cast<i64>(rng());
        return v >> (rng() % 64);
    };
    for (int trial = 0; trial < 20000; ++trial) {
        i64 a = rand_i64(), b = rand_i64();
        BigInt A(a), B(b);
        CAPTURE(a);
        CAPTURE(b);
        CHECK((A + B).str() == i128_str(static_cast<i128>(a) + b));
        CHECK((A - B).str() == i128_str(static_cast<i128>(a) - b));
        CHECK((A * B).str() == i128_str(static_cast<i128>(a) * b));
        CHECK((A < B) == (a < b));
        CHECK((A == B) == (a == b));
    }
}

TEST_CASE("exact division, including multi-limb divisors") {
    std::mt19937_64 rng(11);
    auto rand_i64 = [&rng]() {
        i64 v = static_cast<i64>(rng());
        return v >> (rng() % 60);
    };
    for (int trial = 0; trial < 20000; ++trial) {
        i64 q = rand_i64();
        i64 d = rand_i64();
        if (d == 0) continue;
        BigInt product = BigInt(q) * BigInt(d);
        CAPTURE(q);
        CAPTURE(d);
        CHECK(product.divided_exact(BigInt(d)).str() == std::to_string(q));
    }
    // quotients wider than one limb
    for (int trial = 0; trial < 2000; ++trial) {
        i64 a = rand_i64(), b = rand_i64(), c = rand_i64();
        if (c == 0) continue;
        BigInt product = BigInt(a) * BigInt(b) * BigInt(c);
        BigInt back = product.divided_exact(BigInt(c)).divided_exact(BigInt(b == 0 ? 1 : b));
        if (b != 0) CHECK(back.str() == std::to_string(a));
    }

    CHECK_THROWS_AS(BigInt(10).divided_exact(BigInt(0)), std::invalid_argument);
    CHECK_THROWS_AS(BigInt(10).divided_exact(BigInt(3)), std::invalid_argument);
    CHECK(BigInt(0).divided_exact(BigInt(5)).is_zero());
}

TEST_CASE("division with edge-pattern limbs (qhat correction paths)") {
    // Limb values chosen to sit on the quotient-estimation boundaries.
    const i64 edges[] = {0LL, 1LL, 2LL, 0x7fffffffLL, 0x80000000LL, 0xfffffffeLL, 0xffffffffLL};
    auto compose = [](i64 hi, i64 lo) { return BigInt(hi) * BigInt(1LL << 32) + BigInt(lo); };
    for (i64 q_hi : edges)
        for (i64 q_lo : edges)
            for (i64 v_hi : edges)
                for (i64 v_lo : edges) {
                    BigInt q = compose(q_hi, q_lo);
                    BigInt v = compose(v_hi, v_lo);
                    if (v.is_zero()) continue;
                    BigInt u = q * v;
                    CAPTURE(q_hi);
                    CAPTURE(q_lo);
                    CAPTURE(v_hi);
                    CAPTURE(v_lo);
                    CHECK(u.divided_exact(v) == q);
                    // shifted three-limb dividends against the same divisors
                    BigInt u3 = u * BigInt(1LL << 32) + v * BigInt(3);
                    BigInt q3 = u3.divided_exact(v);
                    CHECK(q3 == q * BigInt(1LL << 32) + BigInt(3));
                }
}

TEST_CASE("powers round-trip through division and printing") {
    BigInt p(1);
    for (int k = 0; k < 40; ++k) p = p * BigInt(10);
    CHECK(p.str() == "1" + std::string(40, '0'));
    BigInt q = p;
    for (int k = 0; k < 40; ++k) q = q.divided_exact(BigInt(10));
    CHECK(q.to_i64() == 1);
    CHECK_THROWS_AS(p.to_i64(), std::overflow_error);

    // 2^200 printed then divided back down
    BigInt two(1);
    for (int k = 0; k < 200; ++k) two = two * BigInt(2);
    CHECK(two.str() == "1606938044258990275541962092341162602522202993782792835301376");
    for (int k = 0; k < 200; ++k) two = two.divided_exact(BigInt(2));
    CHECK(two.to_i64() == 1);
}
