#pragma once

// Dirichlet (*) and generalized (o) convolutions and everything built on
// them: the residue-class divisor "lines"
//     line_r(x) = sum_{i <= x} M(floor(x/i)) * #{d | i : d = r (mod q)},
// corollary sums
//     S_I(x) = sum_{i=1}^{x} ( +-(first - second)(floor(x/i)) + c ),
//     c = (floor((I+1)/2) - 1) / I,
// their value census over x, weighted log-sums
//     W_I(x) = sum_{i=1}^{x} ( +-(first - second)(floor(x/i)) + c ) * log i,
// and the residual series W_I(x) - slope * x.
//
// S_I values are exact rationals with denominator dividing I; W_I is double
// precision. Production paths group i by constant floor(x/i) (O(sqrt x)
// blocks); naive O(x) paths are retained as oracles.

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "fm/farey.hpp"
#include "fm/mertens.hpp"

namespace fm {

using ArithmeticFunction = std::function<i64(i64)>;

ArithmeticFunction af_one();                              // 1(n) = 1
ArithmeticFunction af_identity();                         // n -> n
ArithmeticFunction af_unit_mass();                        // point mass at 1
ArithmeticFunction af_square_wave();                      // b(n) = floor(n/2) - 2*floor(n/4)
ArithmeticFunction af_residue_indicator(i64 q, i64 r);    // 1 iff n = r (mod q)
ArithmeticFunction af_mobius(const SieveTables& tables);  // must outlive the function

// h(n) = sum_{d|n} f(d) g(n/d) for n in [1, limit].
std::vector<i64> dirichlet_convolve(const ArithmeticFunction& f, const ArithmeticFunction& g,
                                    i64 limit);

// (alpha o F)(x) = sum_{n <= x} alpha(n) F(floor(x/n)).
i64 circ_convolve(const ArithmeticFunction& alpha, const std::function<i64(i64)>& summatory,
                  i64 x);

// (alpha o (beta o F))(x) and ((alpha * beta) o F)(x); equal for all inputs.
std::pair<i64, i64> check_associativity(const ArithmeticFunction& alpha,
                                        const ArithmeticFunction& beta,
                                        const std::function<i64(i64)>& summatory, i64 x);

// Divisor counts by residue class with prefix sums, so a line value costs
// O(sqrt x) block lookups. sum over r of line(r, x) equals x exactly.
class ResidueLines {
public:
    ResidueLines(i64 modulus, i64 limit);

    i64 modulus() const { return modulus_; }
    i64 limit() const { return limit_; }

    i64 line(i64 residue, i64 x, const MertensTable& mt) const;
    i64 line_naive(i64 residue, i64 x, const MertensTable& mt) const;

private:
    i64 modulus_, limit_;
    std::vector<std::vector<i64>> prefix_;  // prefix_[r][k] = sum_{i<=k} #{d|i : d=r (mod q)}
};

enum class SignConvention { first_minus_second, second_minus_first };

struct CorollaryConfig {
    i64 interval = 4;  // I
    SignConvention sign = SignConvention::first_minus_second;
    IntervalConvention intervals;

    // (floor((I+1)/2) - 1) / I
    Ratio offset() const { return Ratio((interval + 1) / 2 - 1, interval); }
};

// The value lists the corollaries claim for S_I, verbatim.
struct ClaimedValueSet {
    i64 interval = 0;
    std::vector<Ratio> values;
};

// Defined for I in [4, 8]; empty list otherwise.
ClaimedValueSet claimed_value_set(i64 interval);

// S_I(x) as an exact rational (denominator divides I).
Ratio corollary_sum(const CorollaryConfig& cfg, i64 x, const IntervalCountSeries& series);

// Multiset of S_I(x) values for x in [3, x_max], value -> frequency.
std::map<Ratio, i64> corollary_value_census(const CorollaryConfig& cfg, i64 x_max,
                                            const IntervalCountSeries& series);

// W_I(x); block path over precomputed log prefix sums, naive path as oracle.
double weighted_log_sum(const CorollaryConfig& cfg, i64 x, const IntervalCountSeries& series,
                        const std::vector<double>& log_pref);
double weighted_log_sum_naive(const CorollaryConfig& cfg, i64 x,
                              const IntervalCountSeries& series);

struct ConjectureResidual {
    std::vector<std::pair<i64, double>> residuals;  // (x, W_I(x) - slope*x) for x in [2, x_max]
    double max_abs_over_sqrt = 0.0;                 // max over x of |r(x)| / sqrt(x)
};

// Exploratory only: no pass/fail contract is attached to the residuals.
ConjectureResidual conjecture_residual(const CorollaryConfig& cfg, i64 x_max, double slope,
                                       const IntervalCountSeries& series,
                                       const std::vector<double>& log_pref);

}  // namespace fm
