#include "fm/fitting.hpp"

#include <array>
#include <cmath>

namespace fm {

double t_quantile_975(i64 dof) {
    if (dof < 1) throw std::invalid_argument("t_quantile_975: dof must be >= 1");
    static constexpr std::array<double, 30> table = {
        12.7062047364, 4.3026527299, 3.1824463053, 2.7764451052, 2.5705818366,
        2.4469118488,  2.3646242510, 2.3060041350, 2.2621571627, 2.2281388520,
        2.2009851601,  2.1788128297, 2.1603686565, 2.1447866879, 2.1314495456,
        2.1199052992,  2.1098155778, 2.1009220402, 2.0930240544, 2.0859634473,
        2.0796138447,  2.0738730679, 2.0686576104, 2.0638985616, 2.0595385528,
        2.0555294386,  2.0518305165, 2.0484071418, 2.0452296421, 2.0422724563};
    if (dof <= 30) return table[static_cast<size_t>(dof - 1)];
    // Cornish-Fisher expansion about the normal quantile.
    const double z = 1.959963984540054;
    double v = static_cast<double>(dof);
    double z3 = z * z * z, z5 = z3 * z * z, z7 = z5 * z * z, z9 = z7 * z * z;
    double g1 = (z3 + z) / 4.0;
    double g2 = (5 * z5 + 16 * z3 + 3 * z) / 96.0;
    double g3 = (3 * z7 + 19 * z5 + 17 * z3 - 15 * z) / 384.0;
    double g4 = (79 * z9 + 776 * z7 + 1482 * z5 - 1920 * z3 - 945 * z) / 92160.0;
    return z + g1 / v + g2 / (v * v) + g3 / (v * v * v) + g4 / (v * v * v * v);
}

namespace {

FitResult linear_fit(std::span<const double> xs, std::span<const double> ys) {
    size_t n = xs.size();
    long double mean_x = 0.0L, mean_y = 0.0L;
    for (size_t i = 0; i < n; ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= static_cast<long double>(n);
    mean_y /= static_cast<long double>(n);

    long double sxx = 0.0L, sxy = 0.0L, syy = 0.0L;
    for (size_t i = 0; i < n; ++i) {
        long double dx = xs[i] - mean_x;
        long double dy = ys[i] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx <= 0.0L) throw std::invalid_argument("polyfit: all x values identical");

    long double slope = sxy / sxx;
    long double intercept = mean_y - slope * mean_x;

    long double sse = 0.0L;
    for (size_t i = 0; i < n; ++i) {
        long double r = ys[i] - (slope * xs[i] + intercept);
        sse += r * r;
    }
    i64 dof = static_cast<i64>(n) - 2;
    long double s2 = sse / static_cast<long double>(dof);
    double t = t_quantile_975(dof);
    double se_slope = static_cast<double>(std::sqrt(s2 / sxx));
    double se_int = static_cast<double>(
        std::sqrt(s2 * (1.0L / static_cast<long double>(n) + mean_x * mean_x / sxx)));

    FitResult fit;
    fit.degree = 1;
    fit.n_points = static_cast<i64>(n);
    fit.coefficients = {static_cast<double>(slope), static_cast<double>(intercept)};
    fit.ci95 = {{fit.coefficients[0] - t * se_slope, fit.coefficients[0] + t * se_slope},
                {fit.coefficients[1] - t * se_int, fit.coefficients[1] + t * se_int}};
    fit.sse = static_cast<double>(sse);
    fit.r_squared = syy > 0.0L ? static_cast<double>(1.0L - sse / syy) : 1.0;
    fit.rmse = static_cast<double>(std::sqrt(s2));
    return fit;
}

FitResult quadratic_fit(std::span<const double> xs, std::span<const double> ys) {
    size_t n = xs.size();
    long double mean_x = 0.0L;
    for (double x : xs) mean_x += x;
    mean_x /= static_cast<long double>(n);
    long double scale = 0.0L;
    for (double x : xs) scale = std::max(scale, std::fabs(static_cast<long double>(x) - mean_x));
    if (scale <= 0.0L) throw std::invalid_argument("polyfit: all x values identical");

    // Moments of z = (x - mean)/scale, z in [-1, 1].
    long double s1 = 0, s2 = 0, s3 = 0, s4 = 0, b0 = 0, b1 = 0, b2 = 0;
    for (size_t i = 0; i < n; ++i) {
        long double z = (xs[i] - mean_x) / scale;
        long double z2 = z * z;
        s1 += z;
        s2 += z2;
        s3 += z2 * z;
        s4 += z2 * z2;
        b0 += ys[i];
        b1 += z * ys[i];
        b2 += z2 * ys[i];
    }
    long double s0 = static_cast<long double>(n);

    // A * (a, b, c) = rhs for yhat = a z^2 + b z + c.
    long double A[3][3] = {{s4, s3, s2}, {s3, s2, s1}, {s2, s1, s0}};
    long double rhs[3] = {b2, b1, b0};

    long double det = A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
                      A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
                      A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
    if (std::fabs(static_cast<double>(det)) < 1e-12 * static_cast<double>(s0 * s2 * s4 + 1.0L))
        throw std::invalid_argument("polyfit: degenerate quadratic design");

    // inv(A) via the adjugate; A is symmetric.
    long double inv[3][3];
    inv[0][0] = (A[1][1] * A[2][2] - A[1][2] * A[2][1]) / det;
    inv[0][1] = (A[0][2] * A[2][1] - A[0][1] * A[2][2]) / det;
    inv[0][2] = (A[0][1] * A[1][2] - A[0][2] * A[1][1]) / det;
    inv[1][0] = inv[0][1];
    inv[1][1] = (A[0][0] * A[2][2] - A[0][2] * A[2][0]) / det;
    inv[1][2] = (A[0][2] * A[1][0] - A[0][0] * A[1][2]) / det;
    inv[2][0] = inv[0][2];
    inv[2][1] = inv[1][2];
    inv[2][2] = (A[0][0] * A[1][1] - A[0][1] * A[1][0]) / det;

    long double cz[3];  // coefficients in z
    for (int i = 0; i < 3; ++i) cz[i] = inv[i][0] * rhs[0] + inv[i][1] * rhs[1] + inv[i][2] * rhs[2];

    long double sse = 0.0L, syy = 0.0L, mean_y = b0 / s0;
    for (size_t i = 0; i < n; ++i) {
        long double z = (xs[i] - mean_x) / scale;
        long double r = ys[i] - (cz[0] * z * z + cz[1] * z + cz[2]);
        sse += r * r;
        long double dy = ys[i] - mean_y;
        syy += dy * dy;
    }
    i64 dof = static_cast<i64>(n) - 3;
    long double var = sse / static_cast<long double>(dof);

    // Back to raw x: a2 = a/scale^2, a1 = b/scale - 2 a mean/scale^2,
    // a0 = c - b mean/scale + a mean^2/scale^2.
    long double m = mean_x, s = scale;
    long double J[3][3] = {{1.0L / (s * s), 0, 0},
                           {-2.0L * m / (s * s), 1.0L / s, 0},
                           {m * m / (s * s), -m / s, 1.0L}};
    long double coef[3];
    for (int i = 0; i < 3; ++i) coef[i] = J[i][0] * cz[0] + J[i][1] * cz[1] + J[i][2] * cz[2];

    // Cov_raw = J (var * inv) J^T; only the diagonal is reported.
    double t = t_quantile_975(dof);
    FitResult fit;
    fit.degree = 2;
    fit.n_points = static_cast<i64>(n);
    for (int i = 0; i < 3; ++i) {
        long double se2 = 0.0L;
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q) se2 += J[i][p] * inv[p][q] * var * J[i][q];
        double se = std::sqrt(std::max(0.0, static_cast<double>(se2)));
        fit.coefficients.push_back(static_cast<double>(coef[i]));
        fit.ci95.emplace_back(static_cast<double>(coef[i]) - t * se,
                              static_cast<double>(coef[i]) + t * se);
    }
    fit.sse = static_cast<double>(sse);
    fit.r_squared = syy > 0.0L ? static_cast<double>(1.0L - sse / syy) : 1.0;
    fit.rmse = static_cast<double>(std::sqrt(var));
    return fit;
}

}  // namespace

FitResult polyfit(std::span<const double> xs, std::span<const double> ys, int degree) {
    if (degree != 1 && degree != 2) throw std::invalid_argument("polyfit: degree must be 1 or 2");
    if (xs.size() != ys.size()) throw std::invalid_argument("polyfit: size mismatch");
    if (static_cast<i64>(xs.size()) < degree + 2)
        throw std::invalid_argument("polyfit: need at least degree + 2 points");
    return degree == 1 ? linear_fit(xs, ys) : quadratic_fit(xs, ys);
}

SlopeSweep slope_vs_I_sweep(std::span<const i64> intervals, i64 x_max,
                            const CorollaryConfig& base, const SieveTables& tables) {
    if (x_max > tables.limit) throw std::invalid_argument("slope_vs_I_sweep: x_max exceeds sieve");
    std::vector<double> log_pref = log_prefix(x_max);
    SlopeSweep sweep;
    std::vector<double> xs, ys;
    xs.reserve(static_cast<size_t>(x_max));
    ys.reserve(static_cast<size_t>(x_max));
    for (i64 x = 2; x <= x_max; ++x) xs.push_back(static_cast<double>(x));

    for (i64 interval : intervals) {
        CorollaryConfig cfg = base;
        cfg.interval = interval;
        IntervalCountSeries series = interval_counts(interval, x_max, tables, cfg.intervals);
        ys.clear();
        for (i64 x = 2; x <= x_max; ++x) ys.push_back(weighted_log_sum(cfg, x, series, log_pref));
        FitResult fit = polyfit(xs, ys, 1);
        sweep.slopes.emplace_back(interval, fit.coefficients[0]);
    }

    if (sweep.slopes.size() >= 4) {
        std::vector<double> is, ss;
        for (auto [interval, slope] : sweep.slopes) {
            is.push_back(static_cast<double>(interval));
            ss.push_back(slope);
        }
        sweep.quadratic = polyfit(is, ss, 2);
        sweep.has_quadratic = true;
    }
    return sweep;
}

}  // namespace fm
