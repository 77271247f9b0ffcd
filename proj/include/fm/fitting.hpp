#pragma once

// Ordinary least squares for degree 1 and 2 polynomials with the report
// fields the experiments need: coefficients (highest degree first), 95%
// confidence intervals, SSE, R-squared and dof-adjusted RMSE
// (sqrt(SSE / (n - parameters))).
//
// Normal equations are solved on centered and scaled abscissas for
// conditioning; confidence intervals use the two-sided 97.5% Student-t
// quantile at n - parameters degrees of freedom.

#include <span>
#include <utility>
#include <vector>

#include "fm/convolution.hpp"

namespace fm {

struct FitResult {
    int degree = 1;
    std::vector<double> coefficients;                // highest degree first
    std::vector<std::pair<double, double>> ci95;     // per coefficient (low, high)
    double sse = 0.0;
    double r_squared = 0.0;
    double rmse = 0.0;
    i64 n_points = 0;
};

// Two-sided 97.5% quantile of the t distribution (table for small dof,
// Cornish-Fisher expansion of the normal quantile beyond).
double t_quantile_975(i64 dof);

// Throws std::invalid_argument on a degenerate design (too few points or
// all x equal).
FitResult polyfit(std::span<const double> xs, std::span<const double> ys, int degree);

struct SlopeSweep {
    std::vector<std::pair<i64, double>> slopes;  // (I, fitted slope of W_I)
    bool has_quadratic = false;
    FitResult quadratic;  // degree-2 fit of slope against I, when >= 4 points
};

// For each I: build interval counts under the base convention, compute
// W_I(x) for x in [2, x_max] with offset (floor((I+1)/2)-1)/I, fit degree 1
// and record the slope.
SlopeSweep slope_vs_I_sweep(std::span<const i64> intervals, i64 x_max,
                            const CorollaryConfig& base, const SieveTables& tables);

}  // namespace fm
