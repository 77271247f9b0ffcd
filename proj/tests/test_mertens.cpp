#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fm/mertens.hpp"
#include "oracles.hpp"

using namespace fm;

namespace {

struct Fixture {
    SieveTables tables = build_sieves(25000);
    MertensTable mt = mertens_table(tables);
    std::vector<i64> d_pref = sigma0_prefix(25000);
    std::vector<double> l_pref = log_prefix(25000);
};

Fixture& fx() {
    static Fixture f;
    return f;
}

}  // namespace

TEST_CASE("mertens prefix values") {
    SieveTables t1 = build_sieves(1);
    MertensTable m1 = mertens_table(t1);
    CHECK(m1.prefix == std::vector<i64>{0, 1});

    const MertensTable& mt = fx().mt;
    CHECK(mt.m(12) == -2);
    CHECK(mt.m(6) == -1);
    CHECK(mt.m(4) == -1);
    CHECK(mt.m(3) == -1);
    CHECK(mt.m(2) == 0);
    CHECK(mt.m(1) == 1);
    for (i64 y = 1; y <= 300; ++y) CHECK(mt.m(y) == oracle::mertens_brute(y));
    for (i64 y = 2; y <= 25000; ++y) CHECK(std::abs(mt.m(y) - mt.m(y - 1)) <= 1);
}

TEST_CASE("mertens_recursive agrees with the sieve table") {
    MertensRecursive rec;
    CHECK(rec(1) == 1);
    CHECK(rec(12) == -2);
    const MertensTable& mt = fx().mt;
    for (i64 y = 1; y <= 10000; ++y) {
        CAPTURE(y);
        CHECK(rec(y) == mt.m(y));
    }
    CHECK(rec(1000) == mt.m(1000));
}

TEST_CASE("mikolas sums equal 1, block and naive paths agree") {
    const MertensTable& mt = fx().mt;
    CHECK(check_mikolas_sum(1, 1, mt) == 1);
    CHECK(check_mikolas_sum(12, 1, mt) == 1);
    CHECK(check_mikolas_sum(12, 3, mt) == 1);

    for (i64 x = 1; x <= 2000; ++x)
        for (i64 n = 1; n <= x; ++n) {
            if (check_mikolas_sum(x, n, mt) != 1) {
                CAPTURE(x);
                CAPTURE(n);
                REQUIRE(false);
            }
        }

    std::mt19937_64 rng(20210522);
    for (int trial = 0; trial < 100; ++trial) {
        i64 x = 1 + static_cast<i64>(rng() % 25000);
        i64 n = 1 + static_cast<i64>(rng() % x);
        CAPTURE(x);
        CAPTURE(n);
        CHECK(check_mikolas_sum(x, n, mt) == 1);
        CHECK(check_mikolas_sum_naive(x, n, mt) == 1);
    }
}

TEST_CASE("phi identity: weighted Mertens sum, totient sum, mobius square form") {
    const MertensTable& mt = fx().mt;
    const SieveTables& t = fx().tables;

    PhiIdentity one = check_phi_identity(1, mt, t);
    CHECK(one.weighted_mertens_sum == 1);
    CHECK(one.totient_sum == 1);
    CHECK(one.mobius_square_form == 1);

    PhiIdentity five = check_phi_identity(5, mt, t);
    CHECK(five.weighted_mertens_sum == 10);
    CHECK(five.totient_sum == 10);

    PhiIdentity twelve = check_phi_identity(12, mt, t);
    CHECK(twelve.totient_sum == 46);  // brute-force totient sum
    CHECK(twelve.weighted_mertens_sum == 46);
    CHECK(twelve.mobius_square_form == 46);

    for (i64 x = 1; x <= 3000; ++x) {
        PhiIdentity r = check_phi_identity(x, mt, t);
        CHECK(r.weighted_mertens_sum == r.totient_sum);
        CHECK(r.mobius_square_form == r.totient_sum);
    }
}

TEST_CASE("sigma0 identity sums to x") {
    const MertensTable& mt = fx().mt;
    CHECK(check_sigma0_identity(1, mt, fx().d_pref) == 1);
    CHECK(check_sigma0_identity(12, mt, fx().d_pref) == 12);
    CHECK(check_sigma0_identity(9973, mt, fx().d_pref) == 9973);
    for (i64 x = 1; x <= 2000; ++x) {
        CHECK(check_sigma0_identity(x, mt, fx().d_pref) == x);
        CHECK(check_sigma0_identity_naive(x, mt, fx().tables) == x);
    }
}

TEST_CASE("psi identity: Mertens-weighted log sum equals psi") {
    const MertensTable& mt = fx().mt;
    auto [lhs1, rhs1] = check_psi_identity(1, mt, fx().tables, fx().l_pref);
    CHECK(lhs1 == 0.0);
    CHECK(rhs1 == 0.0);

    auto [lhs2, rhs2] = check_psi_identity(2, mt, fx().tables, fx().l_pref);
    CHECK(lhs2 == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(rhs2 == doctest::Approx(std::log(2.0)).epsilon(1e-12));

    for (i64 x : {10, 100, 999, 5000, 10000, 25000}) {
        auto [lhs, rhs] = check_psi_identity(x, mt, fx().tables, fx().l_pref);
        CHECK(std::fabs(lhs - rhs) < 1e-6 * std::max(1.0, rhs));
    }
}
