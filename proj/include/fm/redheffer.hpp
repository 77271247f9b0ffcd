#pragma once

// Divisibility matrices and their exact determinants.
//
//   R'(i,j)        = 1 if j | i
//   Redheffer(i,j) = 1 if i | j or j = 1; det = M(n)
//   T(i,j)         = M(floor(x/i)) if j | i, else 0
//   U(i,j)         = T(i,j) * phi(j)
//
// T scales the *rows* of R' by M(floor(x/i)); with that orientation every
// column of T sums to 1, row i sums to M(floor(x/i)) * sigma0(i), the grand
// total is x, and the grand total of U is Phi(x).
//
// Determinants use Bareiss fraction-free elimination over arbitrary-
// precision integers, so results are exact at any size the dense cap allows.

#include "fm/bigint.hpp"
#include "fm/mertens.hpp"

namespace fm {

// Dense square integer matrix, 1-based accessors. Builds are capped at
// n <= 2000.
struct IntMatrix {
    i64 n = 0;
    std::vector<i64> a;  // row-major

    IntMatrix() = default;
    explicit IntMatrix(i64 dim) : n(dim), a(static_cast<size_t>(dim) * static_cast<size_t>(dim), 0) {}

    i64& at(i64 i, i64 j) { return a[static_cast<size_t>((i - 1) * n + (j - 1))]; }
    i64 at(i64 i, i64 j) const { return a[static_cast<size_t>((i - 1) * n + (j - 1))]; }
};

IntMatrix build_rprime(i64 n);
IntMatrix build_redheffer(i64 n);
IntMatrix build_T(i64 x, const MertensTable& mt);
IntMatrix build_U(i64 x, const MertensTable& mt, const SieveTables& tables);

BigInt det_exact(const IntMatrix& m);

struct TSumReport {
    i64 x = 0;
    bool columns_all_one = true;   // every column of T sums to 1
    i64 first_bad_column = 0;
    bool rows_match = true;        // row i sums to M(floor(x/i)) * sigma0(i)
    i64 first_bad_row = 0;
    i64 grand_total = 0;           // equals x
};

struct USumReport {
    i64 x = 0;
    bool columns_match = true;     // column j of U sums to phi(j)
    i64 first_bad_column = 0;
    bool rows_match = true;        // row i of U sums to M(floor(x/i)) * i
    i64 first_bad_row = 0;
    i64 grand_total = 0;           // equals Phi(x)
};

// Sum checks walk the nonzero entries by multiples and never materialize
// the matrix, so they run at any x within the Mertens table.
TSumReport check_T_sums(i64 x, const MertensTable& mt);
USumReport check_U_sums(i64 x, const MertensTable& mt, const SieveTables& tables);

}  // namespace fm
