#include "fm/mertens.hpp"

namespace fm {

MertensTable mertens_table(const SieveTables& tables) {
    MertensTable mt;
    mt.limit = tables.limit;
    mt.prefix.assign(static_cast<size_t>(tables.limit) + 1, 0);
    i64 acc = 0;
    for (i64 k = 1; k <= tables.limit; ++k) {
        acc += tables.mobius[static_cast<size_t>(k)];
        mt.prefix[static_cast<size_t>(k)] = acc;
    }
    return mt;
}

i64 MertensRecursive::operator()(i64 y) {
    if (y < 1) return 0;
    if (y == 1) return 1;
    auto it = cache_.find(y);
    if (it != cache_.end()) return it->second;
    // M(y) = 1 - sum_{n=2}^{y} M(floor(y/n)), grouped by constant quotient.
    i64 total = 1;
    for (i64 lo = 2; lo <= y;) {
        i64 v = y / lo;
        i64 hi = y / v;
        total -= (hi - lo + 1) * (*this)(v);
        lo = hi + 1;
    }
    cache_.emplace(y, total);
    return total;
}

i64 check_mikolas_sum(i64 x, i64 n, const MertensTable& mt) {
    // Terms with i*n > x vanish, so this is sum_{i <= y} M(floor(y/i))
    // with y = floor(x/n), by the nested-floor identity.
    i64 y = x / n;
    i64 total = 0;
    for_each_quotient_block(y, [&](i64 v, i64 lo, i64 hi) { total += (hi - lo + 1) * mt.m(v); });
    return total;
}

i64 check_mikolas_sum_naive(i64 x, i64 n, const MertensTable& mt) {
    i64 total = 0;
    for (i64 i = 1; i * n <= x; ++i) total += mt.m(x / (i * n));
    return total;
}

PhiIdentity check_phi_identity(i64 x, const MertensTable& mt, const SieveTables& tables) {
    PhiIdentity r{0, 0, 0};
    // sum M(floor(x/i)) * i over quotient blocks; the inner arithmetic
    // series lo + ... + hi is (lo + hi)(hi - lo + 1)/2.
    for_each_quotient_block(
        x, [&](i64 v, i64 lo, i64 hi) { r.weighted_mertens_sum += mt.m(v) * ((lo + hi) * (hi - lo + 1) / 2); });
    for (i64 i = 1; i <= x; ++i) r.totient_sum += tables.totient[static_cast<size_t>(i)];
    // Phi(x) = (sum mu(n) floor(x/n)^2 + 1) / 2, grouped by blocks using
    // Mobius prefix differences (the Mertens table itself).
    i64 sq = 0;
    for_each_quotient_block(
        x, [&](i64 v, i64 lo, i64 hi) { sq += (mt.m(hi) - mt.m(lo - 1)) * v * v; });
    r.mobius_square_form = (sq + 1) / 2;
    return r;
}

i64 check_sigma0_identity(i64 x, const MertensTable& mt, const std::vector<i64>& sigma0_pref) {
    i64 total = 0;
    for_each_quotient_block(x, [&](i64 v, i64 lo, i64 hi) {
        total += mt.m(v) * (sigma0_pref[static_cast<size_t>(hi)] - sigma0_pref[static_cast<size_t>(lo - 1)]);
    });
    return total;
}

i64 check_sigma0_identity_naive(i64 x, const MertensTable& mt, const SieveTables& tables) {
    i64 total = 0;
    for (i64 i = 1; i <= x; ++i) total += mt.m(x / i) * sigma0(i, tables);
    return total;
}

std::pair<double, double> check_psi_identity(i64 x, const MertensTable& mt,
                                             const SieveTables& tables,
                                             const std::vector<double>& log_pref) {
    long double sum = 0.0L;
    for_each_quotient_block(x, [&](i64 v, i64 lo, i64 hi) {
        sum += static_cast<long double>(mt.m(v)) *
               (log_pref[static_cast<size_t>(hi)] - log_pref[static_cast<size_t>(lo - 1)]);
    });
    return {static_cast<double>(sum), psi(x, tables)};
}

}  // namespace fm
