#pragma once

// Linear (smallest-prime-factor) sieve for the arithmetic functions the
// rest of the library consumes: Mobius mu, Euler totient phi, von Mangoldt
// Lambda, and spf itself. Build cost is O(N) plus O(N log log N) for the
// Lambda pass.

#include <vector>

#include "fm/common.hpp"

namespace fm {

// Immutable after construction; safe to share across concurrent readers.
struct SieveTables {
    i64 limit = 0;                     // N
    std::vector<int8_t> mobius;        // mu(n), n in [1, N]
    std::vector<i64> totient;          // phi(n)
    std::vector<double> mangoldt;      // Lambda(n) = log p if n = p^m else 0
    std::vector<i64> spf;              // smallest prime factor, spf[1] = 1
    std::vector<double> psi_prefix;    // psi(n) = sum_{k <= n} Lambda(k)

    i64 mu(i64 n) const { return mobius[static_cast<size_t>(n)]; }
    i64 phi(i64 n) const { return totient[static_cast<size_t>(n)]; }
    double lambda(i64 n) const { return mangoldt[static_cast<size_t>(n)]; }
};

SieveTables build_sieves(i64 limit);

// Number of divisors of n (sigma_0), by spf factorization.
i64 sigma0(i64 n, const SieveTables& tables);

// #{d : d | n, d = residue (mod modulus)}. Summed over all residues this
// recovers sigma0(n).
i64 divisor_count_residue(i64 n, i64 modulus, i64 residue, const SieveTables& tables);

// Second Chebyshev function psi(x) = sum_{n <= x} Lambda(n).
double psi(i64 x, const SieveTables& tables);

// Divisors of n in no particular order.
std::vector<i64> divisors(i64 n, const SieveTables& tables);

// Prefix sums D(k) = sum_{n <= k} sigma0(n), built by one pass over
// multiples; shared by the quotient-block identity checks.
std::vector<i64> sigma0_prefix(i64 limit);

// L(k) = sum_{n <= k} log n, accumulated in long double.
std::vector<double> log_prefix(i64 limit);

}  // namespace fm
