#include "fm/redheffer.hpp"

namespace fm {

namespace {

constexpr i64 kDenseCap = 2000;

void check_dim(i64 n, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": dimension must be >= 1");
    if (n > kDenseCap) throw std::invalid_argument(std::string(who) + ": dense builds capped at 2000");
}

}  // namespace

IntMatrix build_rprime(i64 n) {
    check_dim(n, "build_rprime");
    IntMatrix m(n);
    for (i64 j = 1; j <= n; ++j)
        for (i64 i = j; i <= n; i += j) m.at(i, j) = 1;
    return m;
}

IntMatrix build_redheffer(i64 n) {
    check_dim(n, "build_redheffer");
    IntMatrix m(n);
    for (i64 i = 1; i <= n; ++i) m.at(i, 1) = 1;
    for (i64 i = 1; i <= n; ++i)
        for (i64 j = i; j <= n; j += i) m.at(i, j) = 1;
    return m;
}

IntMatrix build_T(i64 x, const MertensTable& mt) {
    check_dim(x, "build_T");
    if (x > mt.limit) throw std::invalid_argument("build_T: x exceeds Mertens table");
    IntMatrix m(x);
    for (i64 i = 1; i <= x; ++i) {
        i64 v = mt.m(x / i);
        if (v == 0) continue;
        for (i64 j = 1; j * j <= i; ++j) {
            if (i % j != 0) continue;
            m.at(i, j) = v;
            m.at(i, i / j) = v;
        }
    }
    return m;
}

IntMatrix build_U(i64 x, const MertensTable& mt, const SieveTables& tables) {
    if (x > tables.limit) throw std::invalid_argument("build_U: x exceeds sieve");
    IntMatrix m = build_T(x, mt);
    for (i64 i = 1; i <= x; ++i)
        for (i64 j = 1; j <= x; ++j)
            if (m.at(i, j) != 0) m.at(i, j) *= tables.phi(j);
    return m;
}

BigInt det_exact(const IntMatrix& m) {
    i64 n = m.n;
    if (n < 1) throw std::invalid_argument("det_exact: empty matrix");
    std::vector<BigInt> w(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (size_t k = 0; k < w.size(); ++k) w[k] = BigInt(m.a[k]);
    auto at = [&](i64 i, i64 j) -> BigInt& { return w[static_cast<size_t>(i * n + j)]; };

    int sign = 1;
    BigInt prev(1);
    for (i64 k = 0; k < n - 1; ++k) {
        if (at(k, k).is_zero()) {
            i64 pivot = -1;
            for (i64 r = k + 1; r < n; ++r)
                if (!at(r, k).is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return BigInt(0);
            for (i64 j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (i64 i = k + 1; i < n; ++i) {
            for (i64 j = k + 1; j < n; ++j)
                at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)).divided_exact(prev);
            at(i, k) = BigInt(0);
        }
        prev = at(k, k);
    }
    BigInt det = at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

TSumReport check_T_sums(i64 x, const MertensTable& mt) {
    if (x < 1 || x > mt.limit) throw std::invalid_argument("check_T_sums: x out of range");
    TSumReport rep;
    rep.x = x;
    std::vector<i64> rowsum(static_cast<size_t>(x) + 1, 0);
    for (i64 j = 1; j <= x; ++j) {
        i64 col = 0;
        for (i64 i = j; i <= x; i += j) {
            i64 v = mt.m(x / i);
            col += v;
            rowsum[static_cast<size_t>(i)] += v;
        }
        rep.grand_total += col;
        if (col != 1 && rep.first_bad_column == 0) {
            rep.columns_all_one = false;
            rep.first_bad_column = j;
        }
    }
    // sigma0 by one more pass over multiples
    std::vector<i64> divcount(static_cast<size_t>(x) + 1, 0);
    for (i64 d = 1; d <= x; ++d)
        for (i64 i = d; i <= x; i += d) ++divcount[static_cast<size_t>(i)];
    for (i64 i = 1; i <= x; ++i) {
        if (rowsum[static_cast<size_t>(i)] != mt.m(x / i) * divcount[static_cast<size_t>(i)]) {
            rep.rows_match = false;
            rep.first_bad_row = i;
            break;
        }
    }
    return rep;
}

USumReport check_U_sums(i64 x, const MertensTable& mt, const SieveTables& tables) {
    if (x < 1 || x > mt.limit || x > tables.limit)
        throw std::invalid_argument("check_U_sums: x out of range");
    USumReport rep;
    rep.x = x;
    std::vector<i64> rowsum(static_cast<size_t>(x) + 1, 0);
    for (i64 j = 1; j <= x; ++j) {
        i64 col = 0;
        for (i64 i = j; i <= x; i += j) {
            i64 v = mt.m(x / i) * tables.phi(j);
            col += v;
            rowsum[static_cast<size_t>(i)] += v;
        }
        rep.grand_total += col;
        if (col != tables.phi(j) && rep.first_bad_column == 0) {
            rep.columns_match = false;
            rep.first_bad_column = j;
        }
    }
    for (i64 i = 1; i <= x; ++i) {
        if (rowsum[static_cast<size_t>(i)] != mt.m(x / i) * i) {
            rep.rows_match = false;
            rep.first_bad_row = i;
            break;
        }
    }
    return rep;
}

}  // namespace fm
