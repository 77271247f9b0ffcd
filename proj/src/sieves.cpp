#include "fm/sieves.hpp"

#include <cmath>

namespace fm {

SieveTables build_sieves(i64 limit) {
    if (limit < 1) throw std::invalid_argument("build_sieves: limit must be >= 1");
    SieveTables t;
    t.limit = limit;
    size_t n = static_cast<size_t>(limit);
    t.mobius.assign(n + 1, 0);
    t.totient.assign(n + 1, 0);
    t.mangoldt.assign(n + 1, 0.0);
    t.spf.assign(n + 1, 0);

    t.mobius[1] = 1;
    t.totient[1] = 1;
    t.spf[1] = 1;

    std::vector<i64> primes;
    for (i64 i = 2; i <= limit; ++i) {
        size_t ui = static_cast<size_t>(i);
        if (t.spf[ui] == 0) {
            t.spf[ui] = i;
            t.mobius[ui] = -1;
            t.totient[ui] = i - 1;
            primes.push_back(i);
        }
        for (i64 p : primes) {
            if (p > t.spf[ui] || i * p > limit) break;
            size_t uip = static_cast<size_t>(i * p);
            t.spf[uip] = p;
            if (i % p == 0) {
                t.mobius[uip] = 0;
                t.totient[uip] = t.totient[ui] * p;
            } else {
                t.mobius[uip] = -t.mobius[ui];
                t.totient[uip] = t.totient[ui] * (p - 1);
            }
        }
    }

    // Lambda(p^m) = log p for every prime power p^m <= N.
    for (i64 p : primes) {
        double lp = std::log(static_cast<double>(p));
        for (i64 q = p; q <= limit; q *= p) {
            t.mangoldt[static_cast<size_t>(q)] = lp;
            if (q > limit / p) break;
        }
    }

    t.psi_prefix.assign(n + 1, 0.0);
    long double acc = 0.0L;
    for (i64 i = 1; i <= limit; ++i) {
        acc += t.mangoldt[static_cast<size_t>(i)];
        t.psi_prefix[static_cast<size_t>(i)] = static_cast<double>(acc);
    }
    return t;
}

namespace {

void check_range(i64 n, const SieveTables& tables, const char* who) {
    if (n < 1 || n > tables.limit)
        throw std::out_of_range(std::string(who) + ": argument outside sieve range");
}

// Prime factorization (p, e) pairs via spf.
std::vector<std::pair<i64, int>> factorize(i64 n, const SieveTables& tables) {
    std::vector<std::pair<i64, int>> f;
    while (n > 1) {
        i64 p = tables.spf[static_cast<size_t>(n)];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    return f;
}

}  // namespace

std::vector<i64> divisors(i64 n, const SieveTables& tables) {
    check_range(n, tables, "divisors");
    std::vector<i64> divs{1};
    for (auto [p, e] : factorize(n, tables)) {
        size_t old = divs.size();
        i64 pw = 1;
        for (int k = 1; k <= e; ++k) {
            pw *= p;
            for (size_t i = 0; i < old; ++i) divs.push_back(divs[i] * pw);
        }
    }
    return divs;
}

i64 sigma0(i64 n, const SieveTables& tables) {
    check_range(n, tables, "sigma0");
    i64 count = 1;
    for (auto [p, e] : factorize(n, tables)) count *= e + 1;
    return count;
}

i64 divisor_count_residue(i64 n, i64 modulus, i64 residue, const SieveTables& tables) {
    check_range(n, tables, "divisor_count_residue");
    if (modulus < 1) throw std::invalid_argument("divisor_count_residue: modulus must be >= 1");
    if (residue < 0 || residue >= modulus)
        throw std::invalid_argument("divisor_count_residue: residue outside [0, modulus)");
    i64 count = 0;
    for (i64 d : divisors(n, tables))
        if (d % modulus == residue) ++count;
    return count;
}

double psi(i64 x, const SieveTables& tables) {
    check_range(x, tables, "psi");
    return tables.psi_prefix[static_cast<size_t>(x)];
}

std::vector<i64> sigma0_prefix(i64 limit) {
    std::vector<i64> counts(static_cast<size_t>(limit) + 1, 0);
    for (i64 d = 1; d <= limit; ++d)
        for (i64 m = d; m <= limit; m += d) ++counts[static_cast<size_t>(m)];
    for (i64 k = 1; k <= limit; ++k) counts[static_cast<size_t>(k)] += counts[static_cast<size_t>(k - 1)];
    return counts;
}

std::vector<double> log_prefix(i64 limit) {
    std::vector<double> l(static_cast<size_t>(limit) + 1, 0.0);
    long double acc = 0.0L;
    for (i64 k = 2; k <= limit; ++k) {
        acc += std::log(static_cast<long double>(k));
        l[static_cast<size_t>(k)] = static_cast<double>(acc);
    }
    return l;
}

}  // namespace fm
