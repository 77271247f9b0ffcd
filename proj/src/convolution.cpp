#include "fm/convolution.hpp"

#include <cmath>

namespace fm {

ArithmeticFunction af_one() {
    return [](i64) -> i64 { return 1; };
}

ArithmeticFunction af_identity() {
    return [](i64 n) -> i64 { return n; };
}

ArithmeticFunction af_unit_mass() {
    return [](i64 n) -> i64 { return n == 1 ? 1 : 0; };
}

ArithmeticFunction af_square_wave() {
    return [](i64 n) -> i64 { return n / 2 - 2 * (n / 4); };
}

ArithmeticFunction af_residue_indicator(i64 q, i64 r) {
    if (q < 1 || r < 0 || r >= q)
        throw std::invalid_argument("af_residue_indicator: residue outside [0, q)");
    return [q, r](i64 n) -> i64 { return n % q == r ? 1 : 0; };
}

ArithmeticFunction af_mobius(const SieveTables& tables) {
    const SieveTables* t = &tables;
    return [t](i64 n) -> i64 { return t->mobius[static_cast<size_t>(n)]; };
}

std::vector<i64> dirichlet_convolve(const ArithmeticFunction& f, const ArithmeticFunction& g,
                                    i64 limit) {
    std::vector<i64> gv(static_cast<size_t>(limit) + 1, 0);
    for (i64 n = 1; n <= limit; ++n) gv[static_cast<size_t>(n)] = g(n);
    std::vector<i64> h(static_cast<size_t>(limit) + 1, 0);
    for (i64 d = 1; d <= limit; ++d) {
        i64 fd = f(d);
        if (fd == 0) continue;
        for (i64 m = d; m <= limit; m += d) h[static_cast<size_t>(m)] += fd * gv[static_cast<size_t>(m / d)];
    }
    return h;
}

i64 circ_convolve(const ArithmeticFunction& alpha, const std::function<i64(i64)>& summatory,
                  i64 x) {
    i64 total = 0;
    for (i64 n = 1; n <= x; ++n) total += alpha(n) * summatory(x / n);
    return total;
}

std::pair<i64, i64> check_associativity(const ArithmeticFunction& alpha,
                                        const ArithmeticFunction& beta,
                                        const std::function<i64(i64)>& summatory, i64 x) {
    // Left side: (beta o F)(y) is needed at the distinct quotients y = floor(x/n).
    std::map<i64, i64> inner;
    i64 lhs = 0;
    for (i64 n = 1; n <= x; ++n) {
        i64 y = x / n;
        auto it = inner.find(y);
        if (it == inner.end()) it = inner.emplace(y, circ_convolve(beta, summatory, y)).first;
        lhs += alpha(n) * it->second;
    }
    std::vector<i64> conv = dirichlet_convolve(alpha, beta, x);
    i64 rhs = 0;
    for (i64 n = 1; n <= x; ++n) rhs += conv[static_cast<size_t>(n)] * summatory(x / n);
    return {lhs, rhs};
}

ResidueLines::ResidueLines(i64 modulus, i64 limit) : modulus_(modulus), limit_(limit) {
    if (modulus < 1) throw std::invalid_argument("ResidueLines: modulus must be >= 1");
    prefix_.assign(static_cast<size_t>(modulus),
                   std::vector<i64>(static_cast<size_t>(limit) + 1, 0));
    for (i64 d = 1; d <= limit; ++d) {
        auto& row = prefix_[static_cast<size_t>(d % modulus)];
        for (i64 m = d; m <= limit; m += d) row[static_cast<size_t>(m)] += 1;
    }
    for (auto& row : prefix_)
        for (i64 k = 1; k <= limit; ++k) row[static_cast<size_t>(k)] += row[static_cast<size_t>(k - 1)];
}

i64 ResidueLines::line(i64 residue, i64 x, const MertensTable& mt) const {
    if (residue < 0 || residue >= modulus_)
        throw std::invalid_argument("ResidueLines::line: residue outside [0, modulus)");
    if (x > limit_) throw std::invalid_argument("ResidueLines::line: x exceeds table limit");
    const auto& row = prefix_[static_cast<size_t>(residue)];
    i64 total = 0;
    for_each_quotient_block(x, [&](i64 v, i64 lo, i64 hi) {
        total += mt.m(v) * (row[static_cast<size_t>(hi)] - row[static_cast<size_t>(lo - 1)]);
    });
    return total;
}

i64 ResidueLines::line_naive(i64 residue, i64 x, const MertensTable& mt) const {
    if (residue < 0 || residue >= modulus_)
        throw std::invalid_argument("ResidueLines::line_naive: residue outside [0, modulus)");
    if (x > limit_) throw std::invalid_argument("ResidueLines::line_naive: x exceeds table limit");
    const auto& row = prefix_[static_cast<size_t>(residue)];
    i64 total = 0;
    for (i64 i = 1; i <= x; ++i)
        total += mt.m(x / i) * (row[static_cast<size_t>(i)] - row[static_cast<size_t>(i - 1)]);
    return total;
}

ClaimedValueSet claimed_value_set(i64 interval) {
    ClaimedValueSet c;
    c.interval = interval;
    switch (interval) {
        case 4:
            c.values = {{1, 2}, {1, 4}, {0, 1}, {-1, 4}};
            break;
        case 5:
            c.values = {{4, 5}, {1, 5}, {0, 1}, {-1, 5}, {-2, 5}};
            break;
        case 6:
            c.values = {{1, 1}, {2, 3}, {1, 3}, {0, 1}, {-1, 3}};
            break;
        case 7:
            c.values = {{9, 7}, {6, 7}, {5, 7}, {3, 7}, {1, 7}, {0, 1}, {-3, 7}};
            break;
        case 8:
            c.values = {{9, 8}, {3, 2}, {7, 8}, {3, 4}, {3, 8}, {1, 4}, {0, 1}, {-3, 8}};
            break;
        default:
            break;
    }
    return c;
}

namespace {

void check_config(const CorollaryConfig& cfg, i64 x, const IntervalCountSeries& series) {
    if (cfg.interval != series.interval)
        throw std::invalid_argument("corollary: config and series use different I");
    if (!(cfg.intervals == series.convention))
        throw std::invalid_argument("corollary: config and series use different conventions");
    if (x > series.limit) throw std::invalid_argument("corollary: x exceeds series limit");
}

i64 signed_diff(const CorollaryConfig& cfg, const IntervalCountSeries& series, i64 y) {
    i64 d = series.first(y) - series.second(y);
    return cfg.sign == SignConvention::first_minus_second ? d : -d;
}

}  // namespace

Ratio corollary_sum(const CorollaryConfig& cfg, i64 x, const IntervalCountSeries& series) {
    check_config(cfg, x, series);
    i64 off_num = (cfg.interval + 1) / 2 - 1;
    i128 numerator = 0;  // I * S_I(x)
    for_each_quotient_block(x, [&](i64 v, i64 lo, i64 hi) {
        numerator += static_cast<i128>(hi - lo + 1) *
                     (cfg.interval * signed_diff(cfg, series, v) + off_num);
    });
    if (numerator > INT64_MAX || numerator < INT64_MIN)
        throw std::overflow_error("corollary_sum: value exceeds 64-bit range");
    return {static_cast<i64>(numerator), cfg.interval};
}

std::map<Ratio, i64> corollary_value_census(const CorollaryConfig& cfg, i64 x_max,
                                            const IntervalCountSeries& series) {
    check_config(cfg, x_max, series);
    std::map<Ratio, i64> census;
    for (i64 x = 3; x <= x_max; ++x) census[corollary_sum(cfg, x, series)] += 1;
    return census;
}

double weighted_log_sum(const CorollaryConfig& cfg, i64 x, const IntervalCountSeries& series,
                        const std::vector<double>& log_pref) {
    check_config(cfg, x, series);
    double c = cfg.offset().to_double();
    long double total = 0.0L;
    for_each_quotient_block(x, [&](i64 v, i64 lo, i64 hi) {
        long double logs =
            log_pref[static_cast<size_t>(hi)] - log_pref[static_cast<size_t>(lo - 1)];
        total += (static_cast<long double>(signed_diff(cfg, series, v)) + c) * logs;
    });
    return static_cast<double>(total);
}

double weighted_log_sum_naive(const CorollaryConfig& cfg, i64 x,
                              const IntervalCountSeries& series) {
    check_config(cfg, x, series);
    double c = cfg.offset().to_double();
    long double total = 0.0L;
    for (i64 i = 1; i <= x; ++i)
        total += (static_cast<long double>(signed_diff(cfg, series, x / i)) + c) *
                 std::log(static_cast<long double>(i));
    return static_cast<double>(total);
}

ConjectureResidual conjecture_residual(const CorollaryConfig& cfg, i64 x_max, double slope,
                                       const IntervalCountSeries& series,
                                       const std::vector<double>& log_pref) {
    check_config(cfg, x_max, series);
    ConjectureResidual out;
    out.residuals.reserve(static_cast<size_t>(x_max > 1 ? x_max - 1 : 0));
    for (i64 x = 2; x <= x_max; ++x) {
        double r = weighted_log_sum(cfg, x, series, log_pref) - slope * static_cast<double>(x);
        out.residuals.emplace_back(x, r);
        double ratio = std::fabs(r) / std::sqrt(static_cast<double>(x));
        if (ratio > out.max_abs_over_sqrt) out.max_abs_over_sqrt = ratio;
    }
    return out;
}

}  // namespace fm
