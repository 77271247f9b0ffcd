#include "fm/farey.hpp"

namespace fm {

FareyStream::FareyStream(i64 order, bool include_zero)
    : order_(order), a_(0), b_(1), c_(1), d_(order), emit_zero_(include_zero) {
    if (order < 1) throw std::invalid_argument("FareyStream: order must be >= 1");
}

bool FareyStream::next(Fraction& out) {
    if (emit_zero_) {
        emit_zero_ = false;
        out = Fraction(0, 1);
        return true;
    }
    if (done_) return false;
    out = Fraction(c_, d_);
    if (c_ == 1 && d_ == 1) {
        done_ = true;
        return true;
    }
    i64 k = (order_ + b_) / d_;
    i64 na = c_, nb = d_;
    c_ = k * c_ - a_;
    d_ = k * d_ - b_;
    a_ = na;
    b_ = nb;
    return true;
}

std::vector<Fraction> farey_sequence(i64 order, bool include_zero) {
    std::vector<Fraction> seq;
    FareyStream stream(order, include_zero);
    Fraction f;
    while (stream.next(f)) seq.push_back(f);
    return seq;
}

i64 rank(const Fraction& f, i64 n, const MertensTable& mt) {
    if (n < 2 || n > mt.limit) throw std::invalid_argument("rank: order out of range");
    if (f.num < 1 || f.num >= f.den) throw std::invalid_argument("rank: fraction must be in (0, 1)");
    if (f.den > n) throw std::invalid_argument("rank: denominator exceeds the order");
    i64 t = 0;
    for (i64 j = 2; j <= n; ++j) t += mt.m(n / j) * (j * f.num / f.den);
    return t;
}

i64 count_upto(const Fraction& xi, i64 x, const MertensTable& mt) {
    if (x < 1 || x > mt.limit) throw std::invalid_argument("count_upto: order out of range");
    i64 h = 0;
    for (i64 n = 1; n <= x; ++n) h += (n * xi.num / xi.den) * mt.m(x / n);
    return h;
}

IntervalCountSeries interval_counts(i64 interval, i64 limit, const SieveTables& tables,
                                    IntervalConvention convention) {
    if (interval < 3) throw std::invalid_argument("interval_counts: I must be >= 3");
    if (limit > tables.limit) throw std::invalid_argument("interval_counts: limit exceeds sieve");

    IntervalCountSeries s;
    s.interval = interval;
    s.limit = limit;
    s.convention = convention;

    size_t n = static_cast<size_t>(limit);
    // inc1[y] = #{a <= y/I : gcd(a, y) = 1}, and inc2[y] the same for the
    // upper bound (2y/I inclusive, or strictly below 2/I when the endpoint
    // is deferred to order I).
    std::vector<i64> inc1(n + 1, 0), inc2(n + 1, 0);
    bool deferred = convention.upper_endpoint == UpperEndpoint::at_order_i;
    for (i64 d = 1; d <= limit; ++d) {
        i64 sign = tables.mobius[static_cast<size_t>(d)];
        if (sign == 0) continue;
        i64 id = interval * d;
        for (i64 y = d; y <= limit; y += d) {
            inc1[static_cast<size_t>(y)] += sign * (y / id);
            i64 top = deferred ? (2 * y - 1) / interval : 2 * y / interval;
            inc2[static_cast<size_t>(y)] += sign * (top / d);
        }
    }

    s.first_raw.assign(n + 1, 0);
    s.second_raw.assign(n + 1, 0);
    for (i64 y = 1; y <= limit; ++y) {
        size_t uy = static_cast<size_t>(y);
        s.first_raw[uy] = s.first_raw[uy - 1] + inc1[uy];
        s.second_raw[uy] = s.second_raw[uy - 1] + (inc2[uy] - inc1[uy]);
    }
    if (convention.include_zero)
        for (i64 y = 1; y <= limit; ++y) s.first_raw[static_cast<size_t>(y)] += 1;
    if (deferred && interval <= limit)
        for (i64 y = interval; y <= limit; ++y) s.second_raw[static_cast<size_t>(y)] += 1;
    return s;
}

namespace {

i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

// acc += add_num / add_den, exactly; returns false on 128-bit overflow.
bool add_exact(i128& num, i128& den, i128 add_num, i128 add_den) {
    i128 g = gcd128(den, add_den);
    i128 den_scaled = add_den / g;
    i128 new_den, t1, t2, new_num;
    if (__builtin_mul_overflow(den, den_scaled, &new_den)) return false;
    if (__builtin_mul_overflow(num, den_scaled, &t1)) return false;
    if (__builtin_mul_overflow(add_num, den / g, &t2)) return false;
    if (__builtin_add_overflow(t1, t2, &new_num)) return false;
    i128 r = gcd128(new_num, new_den);
    if (r > 1) {
        new_num /= r;
        new_den /= r;
    }
    num = new_num;
    den = new_den;
    return true;
}

}  // namespace

FranelSum franel_delta_sum(i64 x, i64 phi_hint) {
    if (x < 1) throw std::invalid_argument("franel_delta_sum: x must be >= 1");
    i64 phi = phi_hint;
    if (phi < 0) {
        phi = 0;
        Fraction f;
        FareyStream counter(x);
        while (counter.next(f)) ++phi;
    }

    // bucket[b] = sum over fractions a/b of |a*Phi - nu*b|; the total is
    // (sum_b bucket[b] / b) / Phi. 128-bit: a bucket can pass 2^63 once
    // x reaches the 10^5 range.
    std::vector<i128> bucket(static_cast<size_t>(x) + 1, 0);
    FareyStream stream(x);
    Fraction f;
    i64 nu = 0;
    while (stream.next(f)) {
        ++nu;
        i64 d = f.num * phi - nu * f.den;
        bucket[static_cast<size_t>(f.den)] += d < 0 ? -d : d;
    }
    if (nu != phi) throw std::invalid_argument("franel_delta_sum: phi_hint does not match Phi(x)");

    FranelSum r;
    long double total = 0.0L;
    for (i64 b = 1; b <= x; ++b)
        total += static_cast<long double>(bucket[static_cast<size_t>(b)]) / static_cast<long double>(b);
    total /= static_cast<long double>(phi);
    r.value = static_cast<double>(total);

    r.exact_valid = true;
    r.num = 0;
    r.den = 1;
    for (i64 b = 1; b <= x && r.exact_valid; ++b) {
        if (bucket[static_cast<size_t>(b)] == 0) continue;
        r.exact_valid = add_exact(r.num, r.den, bucket[static_cast<size_t>(b)],
                                  static_cast<i128>(b) * phi);
    }
    if (r.exact_valid)
        r.value = static_cast<double>(static_cast<long double>(r.num) / static_cast<long double>(r.den));
    else {
        r.num = 0;
        r.den = 1;
    }
    return r;
}

}  // namespace fm
