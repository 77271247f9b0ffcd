#pragma once

// The Mertens function M(x) = sum_{n <= x} mu(n), computed two independent
// ways (sieve prefix table, and a memoized recursion over the O(sqrt y)
// distinct floor quotients that needs no Mobius table), plus the summation
// identities it satisfies:
//
//   sum_{i <= x} M(floor(x/(i n)))          = 1        for every n <= x
//   sum_{i <= x} M(floor(x/i)) * i          = Phi(x) = sum_{i <= x} phi(i)
//   Phi(x) = (sum_{n <= x} mu(n) floor(x/n)^2 + 1) / 2
//   sum_{i <= x} M(floor(x/i)) * sigma0(i)  = x
//   sum_{i <= x} M(floor(x/i)) * log(i)     = psi(x)
//
// Each check is evaluated both naively (O(x) lookups) and by quotient-block
// grouping (O(sqrt x) blocks); the block path is the production one.

#include <unordered_map>
#include <utility>
#include <vector>

#include "fm/sieves.hpp"

namespace fm {

struct MertensTable {
    i64 limit = 0;
    std::vector<i64> prefix;  // prefix[k] = M(k), prefix[0] = 0

    i64 m(i64 y) const { return prefix[static_cast<size_t>(y)]; }
};

MertensTable mertens_table(const SieveTables& tables);

// M(y) from the rearranged Mikolas identity M(y) = 1 - sum_{n=2}^{y} M(floor(y/n)),
// memoized over distinct quotient values. Independent of any sieve.
class MertensRecursive {
public:
    i64 operator()(i64 y);

private:
    std::unordered_map<i64, i64> cache_;
};

// sum_{i=1}^{x} M(floor(x/(i*n))); equals 1 for every 1 <= n <= x.
i64 check_mikolas_sum(i64 x, i64 n, const MertensTable& mt);
i64 check_mikolas_sum_naive(i64 x, i64 n, const MertensTable& mt);

struct PhiIdentity {
    i64 weighted_mertens_sum;  // sum M(floor(x/i)) * i
    i64 totient_sum;           // Phi(x)
    i64 mobius_square_form;    // (sum mu(n) floor(x/n)^2 + 1) / 2
};

// All three members are equal for every x.
PhiIdentity check_phi_identity(i64 x, const MertensTable& mt, const SieveTables& tables);

// sum_{i=1}^{x} M(floor(x/i)) * sigma0(i); equals x. sigma0_pref is
// sigma0_prefix(N) from sieves.hpp.
i64 check_sigma0_identity(i64 x, const MertensTable& mt, const std::vector<i64>& sigma0_pref);
i64 check_sigma0_identity_naive(i64 x, const MertensTable& mt, const SieveTables& tables);

// (sum_{i=1}^{x} M(floor(x/i)) log i, psi(x)); the two agree up to
// accumulated floating-point error. log_pref is log_prefix(N).
std::pair<double, double> check_psi_identity(i64 x, const MertensTable& mt,
                                             const SieveTables& tables,
                                             const std::vector<double>& log_pref);

}  // namespace fm
