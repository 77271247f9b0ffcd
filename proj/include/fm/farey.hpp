#pragma once

// Farey sequence machinery: ordered enumeration by the neighbor recurrence,
// rank of a fraction via
//     t = sum_{j=2}^{n} M(floor(n/j)) * floor(j * f),
// the count of fractions not exceeding xi via
//     h(xi, x) = sum_{n=1}^{x} floor(n * xi) * M(floor(x/n)),
// per-order counts of fractions in (0, 1/I] and (1/I, 2/I], and the
// Franel-Landau sum of |rho_nu - nu/Phi(x)|.
//
// All floors of n * xi are evaluated in exact integer arithmetic
// (floor(n*a/b)); no floating point enters any counting path.

#include <vector>

#include "fm/fraction.hpp"
#include "fm/mertens.hpp"

namespace fm {

// Streams F_x in ascending order with O(1) state: consecutive terms a/b < c/d
// are advanced by k = floor((x + b) / d), next = (k*c - a) / (k*d - b).
// By default starts after 0/1 and ends at 1/1, so the stream has exactly
// Phi(x) elements.
class FareyStream {
public:
    explicit FareyStream(i64 order, bool include_zero = false);

    // Yields the next fraction; returns false once the stream is exhausted.
    bool next(Fraction& out);

private:
    i64 order_;
    i64 a_, b_, c_, d_;
    bool emit_zero_;
    bool done_ = false;
};

std::vector<Fraction> farey_sequence(i64 order, bool include_zero = false);

// 1-based position of f in F_n (f strictly between 0 and 1, denominator <= n).
i64 rank(const Fraction& f, i64 n, const MertensTable& mt);

// h(xi, x): number of fractions of F_x (excluding 0/1) not greater than xi.
// h(1, x) = Phi(x).
i64 count_upto(const Fraction& xi, i64 x, const MertensTable& mt);

// Where the fraction 2/I itself is credited when counting the second
// interval: `inclusive` counts it from the order of its reduced denominator
// (plain closed-interval counting); `at_order_i` counts it only from order I
// on. The two agree for odd I; for even I, 2/I reduces to 1/(I/2) and the
// choice changes every second[y] for y in [I/2, I).
enum class UpperEndpoint { inclusive, at_order_i };

struct IntervalConvention {
    bool include_zero = false;       // count 0/1 as a member of the first interval
    i64 zero_override_limit = 2;     // orders <= this read as 0
    UpperEndpoint upper_endpoint = UpperEndpoint::inclusive;

    friend bool operator==(const IntervalConvention&, const IntervalConvention&) = default;
};

// For fixed I: first[y] = #fractions of F_y in (0, 1/I], second[y] = # in
// (1/I, 2/I], built incrementally in O(N log N); the increment at order y is
// sum_{d|y} mu(d) * floor(y*k/(I*d)).
struct IntervalCountSeries {
    i64 interval = 4;  // I
    i64 limit = 0;     // N
    IntervalConvention convention;
    std::vector<i64> first_raw;   // cumulative counts, before the zero override
    std::vector<i64> second_raw;

    i64 first(i64 y) const {
        return y <= convention.zero_override_limit ? 0 : first_raw[static_cast<size_t>(y)];
    }
    i64 second(i64 y) const {
        return y <= convention.zero_override_limit ? 0 : second_raw[static_cast<size_t>(y)];
    }
};

IntervalCountSeries interval_counts(i64 interval, i64 limit, const SieveTables& tables,
                                    IntervalConvention convention = {});

// sum_{nu=1}^{Phi} |rho_nu - nu/Phi| over the stream of F_x. Every delta is
// an exact integer ratio |a*Phi - nu*b| / (b*Phi); per-denominator integer
// buckets keep the accumulation exact, and the 128-bit reduced rational is
// reported alongside the real value while it fits.
struct FranelSum {
    double value = 0.0;
    bool exact_valid = false;
    i128 num = 0;
    i128 den = 1;
};

// phi_hint, when >= 0, must equal Phi(x) and saves the counting pass.
FranelSum franel_delta_sum(i64 x, i64 phi_hint = -1);

}  // namespace fm
