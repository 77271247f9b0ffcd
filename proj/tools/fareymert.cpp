// fareymert: identity verification suites, figure sweeps, corollary value
// censuses, least-squares fit reports, and the Franel-Landau series, with
// CSV output for external plotting.
//
// Exit codes: 0 success / all checks pass, 1 verification or I/O failure,
// 2 usage error.

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "fm/convolution.hpp"
#include "fm/fitting.hpp"
#include "fm/redheffer.hpp"

using namespace fm;

namespace {

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// ---------------------------------------------------------------- output --

struct Output {
    std::ostream* stream = &std::cout;
    std::ofstream file;

    bool open(const std::string& path) {
        if (path.empty() || path == "-") return true;
        file.open(path);
        if (!file) {
            std::cerr << "error: cannot open output path: " << path << "\n";
            return false;
        }
        stream = &file;
        return true;
    }
};

// ----------------------------------------------------------- conventions --

struct ConventionFlags {
    std::string sign = "first-minus-second";
    bool include_zero = false;
    i64 zero_override = 2;
    std::string endpoint = "deferred";
};

void add_convention_flags(CLI::App* cmd, ConventionFlags& flags) {
    cmd->add_option("--sign", flags.sign, "interval difference order")
        ->check(CLI::IsMember({"first-minus-second", "second-minus-first"}));
    cmd->add_flag("--include-zero", flags.include_zero, "count 0/1 in the first interval");
    cmd->add_option("--zero-override", flags.zero_override,
                    "orders <= this read as zero counts (default 2)")
        ->check(CLI::Range(static_cast<i64>(0), static_cast<i64>(1000)));
    cmd->add_option("--endpoint", flags.endpoint,
                    "where the fraction 2/I is credited: 'deferred' counts it from order I "
                    "(the convention under which the corollary value sets are bounded), "
                    "'inclusive' from its reduced denominator")
        ->check(CLI::IsMember({"deferred", "inclusive"}));
}

CorollaryConfig make_config(i64 interval, const ConventionFlags& flags) {
    CorollaryConfig cfg;
    cfg.interval = interval;
    cfg.sign = flags.sign == "first-minus-second" ? SignConvention::first_minus_second
                                                  : SignConvention::second_minus_first;
    cfg.intervals.include_zero = flags.include_zero;
    cfg.intervals.zero_override_limit = flags.zero_override;
    cfg.intervals.upper_endpoint =
        flags.endpoint == "deferred" ? UpperEndpoint::at_order_i : UpperEndpoint::inclusive;
    return cfg;
}

std::string describe(const CorollaryConfig& cfg) {
    std::ostringstream os;
    os << "sign="
       << (cfg.sign == SignConvention::first_minus_second ? "first-minus-second"
                                                          : "second-minus-first")
       << " include_zero=" << (cfg.intervals.include_zero ? 1 : 0)
       << " zero_override=" << cfg.intervals.zero_override_limit << " endpoint="
       << (cfg.intervals.upper_endpoint == UpperEndpoint::at_order_i ? "deferred" : "inclusive");
    return os.str();
}

// ------------------------------------------------------------- threading --

void run_over_range(i64 lo, i64 hi, int threads, const std::function<void(i64)>& body) {
    if (hi < lo) return;
    if (threads <= 1) {
        for (i64 x = lo; x <= hi; ++x) body(x);
        return;
    }
    std::atomic<i64> next{lo};
    const i64 chunk = 64;
    auto worker = [&]() {
        for (;;) {
            i64 start = next.fetch_add(chunk);
            if (start > hi) return;
            i64 end = std::min(hi, start + chunk - 1);
            for (i64 x = start; x <= end; ++x) body(x);
        }
    };
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

// ------------------------------------------------------- verify suites ----

struct CheckOutcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& d) {
        if (pass) {
            pass = false;
            detail = d;
        }
    }
};

bool report(const std::string& name, const CheckOutcome& outcome) {
    if (outcome.pass)
        std::cout << "PASS " << name << "\n";
    else
        std::cout << "FAIL " << name << " (first counterexample: " << outcome.detail << ")\n";
    return outcome.pass;
}

bool verify_identities(i64 xmax) {
    SieveTables tables = build_sieves(xmax);
    MertensTable mt = mertens_table(tables);
    std::vector<i64> d_pref = sigma0_prefix(xmax);
    std::vector<double> l_pref = log_prefix(xmax);
    bool all = true;

    {
        CheckOutcome c;
        for (i64 x = 1; x <= xmax && c.pass; ++x)
            if (check_mikolas_sum(x, 1, mt) != 1) c.fail("x=" + std::to_string(x));
        all &= report("unit sum: sum M(floor(x/i)) = 1 for x <= " + std::to_string(xmax), c);
    }
    {
        CheckOutcome c;
        for (i64 x = 1; x <= xmax && c.pass; ++x)
            for (i64 n = 1; n <= x; ++n)
                if (check_mikolas_sum(x, n, mt) != 1) {
                    c.fail("x=" + std::to_string(x) + " n=" + std::to_string(n));
                    break;
                }
        all &= report("generalized sums: sum M(floor(x/(i n))) = 1 for all n <= x", c);
    }
    {
        CheckOutcome c;
        for (i64 x = 1; x <= xmax && c.pass; ++x) {
            PhiIdentity r = check_phi_identity(x, mt, tables);
            if (r.weighted_mertens_sum != r.totient_sum || r.mobius_square_form != r.totient_sum)
                c.fail("x=" + std::to_string(x));
        }
        all &= report("totient identity: sum M(floor(x/i)) i = Phi(x) = (sum mu(n) floor(x/n)^2 + 1)/2", c);
    }
    {
        CheckOutcome c;
        for (i64 x = 1; x <= xmax && c.pass; ++x)
            if (check_sigma0_identity(x, mt, d_pref) != x) c.fail("x=" + std::to_string(x));
        all &= report("divisor identity: sum M(floor(x/i)) sigma0(i) = x", c);
    }
    {
        CheckOutcome c;
        for (i64 x = 1; x <= xmax && c.pass; ++x) {
            auto [lhs, rhs] = check_psi_identity(x, mt, tables, l_pref);
            if (std::fabs(lhs - rhs) >= 1e-6 * std::max(1.0, rhs))
                c.fail("x=" + std::to_string(x));
        }
        all &= report("chebyshev identity: sum M(floor(x/i)) log i = psi(x) within 1e-6 relative", c);
    }
    {
        CheckOutcome c;
        i64 phi_total = 0;
        for (i64 x = 1; x <= xmax && c.pass; ++x) {
            phi_total += tables.phi(x);
            TSumReport t = check_T_sums(x, mt);
            if (!t.columns_all_one)
                c.fail("T column, x=" + std::to_string(x) + " j=" + std::to_string(t.first_bad_column));
            else if (!t.rows_match)
                c.fail("T row, x=" + std::to_string(x));
            else if (t.grand_total != x)
                c.fail("T total, x=" + std::to_string(x));
            if (!c.pass) break;
            USumReport u = check_U_sums(x, mt, tables);
            if (!u.columns_match)
                c.fail("U column, x=" + std::to_string(x));
            else if (!u.rows_match)
                c.fail("U row, x=" + std::to_string(x));
            else if (u.grand_total != phi_total)
                c.fail("U total, x=" + std::to_string(x));
        }
        all &= report("T/U sums: columns 1 / phi(j), rows M*sigma0 / M*i, totals x / Phi(x)", c);
    }
    return all;
}

bool verify_rank(i64 nmax) {
    SieveTables tables = build_sieves(std::max<i64>(nmax, 2));
    MertensTable mt = mertens_table(tables);
    CheckOutcome c;
    for (i64 n = 2; n <= nmax && c.pass; ++n) {
        FareyStream stream(n);
        Fraction f;
        i64 pos = 0;
        while (stream.next(f)) {
            ++pos;
            if (f.num == f.den) break;  // the rank formula excludes 1/1
            if (rank(f, n, mt) != pos) {
                c.fail("n=" + std::to_string(n) + " f=" + f.str());
                break;
            }
        }
    }
    return report("rank formula: rank matches enumeration position for n <= " + std::to_string(nmax), c);
}

bool verify_count(i64 xmax) {
    SieveTables tables = build_sieves(xmax);
    MertensTable mt = mertens_table(tables);
    const std::vector<Fraction> cuts = {{1, 8}, {1, 7}, {1, 6}, {1, 5}, {1, 4},
                                        {1, 3}, {2, 5}, {1, 2}, {2, 3}, {1, 1}};
    CheckOutcome c;
    for (i64 x = 1; x <= xmax && c.pass; ++x) {
        std::vector<i64> brute(cuts.size(), 0);
        FareyStream stream(x);
        Fraction f;
        while (stream.next(f))
            for (size_t k = 0; k < cuts.size(); ++k)
                if (f <= cuts[k]) ++brute[k];
        for (size_t k = 0; k < cuts.size(); ++k)
            if (count_upto(cuts[k], x, mt) != brute[k]) {
                c.fail("x=" + std::to_string(x) + " xi=" + cuts[k].str());
                break;
            }
    }
    return report("count formula: h(xi, x) matches enumeration for x <= " + std::to_string(xmax), c);
}

bool verify_matrix(i64 xmax) {
    i64 det_max = std::min<i64>(xmax, 30);
    i64 sum_max = std::min<i64>(xmax, 2000);
    SieveTables tables = build_sieves(std::max<i64>(sum_max, det_max));
    MertensTable mt = mertens_table(tables);
    bool all = true;
    {
        CheckOutcome c;
        for (i64 n = 1; n <= det_max && c.pass; ++n)
            if (det_exact(build_redheffer(n)).to_i64() != mt.m(n)) c.fail("n=" + std::to_string(n));
        all &= report("redheffer: det = M(n) for n <= " + std::to_string(det_max), c);
    }
    {
        CheckOutcome c;
        i64 phi_total = 0;
        for (i64 x = 1; x <= sum_max && c.pass; ++x) {
            phi_total += tables.phi(x);
            TSumReport t = check_T_sums(x, mt);
            USumReport u = check_U_sums(x, mt, tables);
            if (!t.columns_all_one || !t.rows_match || t.grand_total != x || !u.columns_match ||
                !u.rows_match || u.grand_total != phi_total)
                c.fail("x=" + std::to_string(x));
        }
        all &= report("T/U sums for x <= " + std::to_string(sum_max), c);
    }
    return all;
}

bool verify_residues(i64 xmax) {
    i64 part_max = std::min<i64>(xmax, 2000);
    SieveTables tables = build_sieves(xmax);
    MertensTable mt = mertens_table(tables);
    bool all = true;
    {
        CheckOutcome c;
        for (i64 q : {2, 4, 5, 6, 7, 8}) {
            ResidueLines lines(q, part_max);
            for (i64 x = 1; x <= part_max && c.pass; ++x) {
                i64 total = 0;
                for (i64 r = 0; r < q; ++r) total += lines.line(r, x, mt);
                if (total != x) c.fail("q=" + std::to_string(q) + " x=" + std::to_string(x));
            }
        }
        all &= report("residue lines partition x for q in {2,4,5,6,7,8}, x <= " +
                          std::to_string(part_max),
                      c);
    }
    {
        CheckOutcome c;
        ResidueLines lines(4, xmax);
        std::vector<double> xs;
        for (i64 x = 2; x <= xmax; ++x) xs.push_back(static_cast<double>(x));
        for (i64 r = 0; r < 4 && c.pass; ++r) {
            std::vector<double> ys;
            for (i64 x = 2; x <= xmax; ++x) ys.push_back(static_cast<double>(lines.line(r, x, mt)));
            double slope = polyfit(xs, ys, 1).coefficients[0];
            if (std::fabs(slope - 0.25) > 0.01)
                c.fail("r=" + std::to_string(r) + " slope=" + fmt_real(slope));
        }
        all &= report("residue line slopes are 0.25 +- 0.01 over x <= " + std::to_string(xmax), c);
    }
    return all;
}

int cmd_verify(const std::string& suite, i64 xmax) {
    bool ok = true;
    if (suite == "identities" || suite == "all") ok &= verify_identities(xmax);
    if (suite == "rank" || suite == "all")
        ok &= verify_rank(suite == "all" ? std::min<i64>(xmax, 100) : xmax);
    if (suite == "count" || suite == "all")
        ok &= verify_count(suite == "all" ? std::min<i64>(xmax, 300) : xmax);
    if (suite == "matrix" || suite == "all") ok &= verify_matrix(xmax);
    if (suite == "residues" || suite == "all") ok &= verify_residues(xmax);
    std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
    return ok ? 0 : 1;
}

// --------------------------------------------------------------- sweeps ---

int cmd_sweep_figure1(i64 xmax, int threads, Output& out) {
    SieveTables tables = build_sieves(xmax);
    MertensTable mt = mertens_table(tables);
    ResidueLines lines(4, xmax);
    std::vector<std::string> rows(static_cast<size_t>(xmax));
    run_over_range(1, xmax, threads, [&](i64 x) {
        std::ostringstream os;
        os << x;
        for (i64 r = 0; r < 4; ++r) os << "," << lines.line(r, x, mt);
        rows[static_cast<size_t>(x - 1)] = os.str();
    });
    *out.stream << "x,line_r0,line_r1,line_r2,line_r3\n";
    for (const auto& row : rows) *out.stream << row << "\n";
    return 0;
}

int cmd_sweep_figure2(i64 xmax, i64 interval, const ConventionFlags& flags, int threads,
                      Output& out) {
    SieveTables tables = build_sieves(xmax);
    CorollaryConfig cfg = make_config(interval, flags);
    IntervalCountSeries series = interval_counts(interval, xmax, tables, cfg.intervals);
    std::vector<double> l_pref = log_prefix(xmax);
    std::vector<std::string> rows(static_cast<size_t>(xmax - 1));
    run_over_range(2, xmax, threads, [&](i64 x) {
        std::ostringstream os;
        os << x << "," << fmt_real(psi(x, tables)) << ","
           << fmt_real(weighted_log_sum(cfg, x, series, l_pref));
        rows[static_cast<size_t>(x - 2)] = os.str();
    });
    *out.stream << "x,psi,w_sum\n";
    for (const auto& row : rows) *out.stream << row << "\n";
    return 0;
}

int cmd_sweep_slopes(int figure, i64 imin, i64 imax, i64 xmax, const ConventionFlags& flags,
                     Output& out) {
    SieveTables tables = build_sieves(xmax);
    std::vector<i64> intervals;
    for (i64 interval = imin; interval <= imax; ++interval)
        if ((interval % 2 == 0) == (figure == 3)) intervals.push_back(interval);
    if (intervals.empty()) {
        std::cerr << "error: no I values in [" << imin << ", " << imax << "] for figure " << figure
                  << "\n";
        return 1;
    }
    SlopeSweep sweep = slope_vs_I_sweep(intervals, xmax, make_config(4, flags), tables);
    *out.stream << "I,slope\n";
    for (auto [interval, slope] : sweep.slopes)
        *out.stream << interval << "," << fmt_real(slope) << "\n";
    std::ostream& info = out.stream == &std::cout ? std::cerr : std::cout;
    if (sweep.has_quadratic) {
        const FitResult& q = sweep.quadratic;
        info << "quadratic fit of slope vs I: p1=" << fmt_real(q.coefficients[0])
             << " p2=" << fmt_real(q.coefficients[1]) << " p3=" << fmt_real(q.coefficients[2])
             << " R^2=" << fmt_real(q.r_squared) << " RMSE=" << fmt_real(q.rmse) << "\n";
    } else {
        info << "quadratic fit skipped (need at least 4 slope points)\n";
    }
    return 0;
}

// --------------------------------------------------------------- census ---

int cmd_census(i64 interval, i64 xmax, const ConventionFlags& selected, Output& out,
               bool have_out) {
    SieveTables tables = build_sieves(xmax);
    ClaimedValueSet claimed = claimed_value_set(interval);

    std::cout << "census: S_" << interval << "(x) for x in [3, " << xmax << "]\n";
    std::cout << "claimed value set:";
    if (claimed.values.empty()) {
        std::cout << " (none stated for I=" << interval << ")";
    } else {
        for (const Ratio& v : claimed.values) std::cout << " " << v.str();
    }
    std::cout << "\n\n";

    for (int endpoint = 0; endpoint < 2; ++endpoint)
        for (int zero = 0; zero < 2; ++zero)
            for (int sign = 0; sign < 2; ++sign) {
                CorollaryConfig cfg;
                cfg.interval = interval;
                cfg.sign =
                    sign ? SignConvention::second_minus_first : SignConvention::first_minus_second;
                cfg.intervals.include_zero = zero != 0;
                cfg.intervals.upper_endpoint =
                    endpoint ? UpperEndpoint::inclusive : UpperEndpoint::at_order_i;
                IntervalCountSeries series = interval_counts(interval, xmax, tables, cfg.intervals);
                auto census = corollary_value_census(cfg, xmax, series);

                Ratio max_abs(0);
                for (const auto& [value, count] : census) {
                    Ratio a = value.num < 0 ? Ratio(-value.num, value.den) : value;
                    if (max_abs < a) max_abs = a;
                }
                bool bounded = static_cast<i64>(census.size()) <= 12 && !(Ratio(5, 2) < max_abs);

                std::cout << "convention " << describe(cfg) << "\n";
                std::cout << "  distinct values = " << census.size() << ", max |S| = "
                          << max_abs.str()
                          << ", bounded (<=12 values, |S| <= 5/2) = " << (bounded ? "yes" : "no")
                          << "\n";
                if (census.size() <= 16) {
                    std::cout << "  values:";
                    for (const auto& [value, count] : census)
                        std::cout << " " << value.str() << ":" << count;
                    std::cout << "\n";
                    if (!claimed.values.empty()) {
                        std::vector<Ratio> observed;
                        for (const auto& [value, count] : census) observed.push_back(value);
                        std::vector<Ratio> want = claimed.values;
                        std::sort(want.begin(), want.end());
                        bool match = observed == want;
                        std::cout << "  matches claimed set: " << (match ? "yes" : "NO") << "\n";
                        if (!match) {
                            std::cout << "    observed-only:";
                            for (const Ratio& v : observed)
                                if (!std::count(want.begin(), want.end(), v))
                                    std::cout << " " << v.str();
                            std::cout << "\n    claimed-only:";
                            for (const Ratio& v : want)
                                if (!std::count(observed.begin(), observed.end(), v))
                                    std::cout << " " << v.str();
                            std::cout << "\n";
                        }
                    }
                }
                std::cout << "\n";
            }

    if (have_out) {
        CorollaryConfig cfg = make_config(interval, selected);
        IntervalCountSeries series = interval_counts(interval, xmax, tables, cfg.intervals);
        auto census = corollary_value_census(cfg, xmax, series);
        *out.stream << "value,count\n";
        for (const auto& [value, count] : census)
            *out.stream << value.str() << "," << count << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ fits --

void print_fit(const std::string& label, const FitResult& fit) {
    std::cout << label << "\n";
    std::cout << "  p1 = " << fmt_real(fit.coefficients[0]) << "  ci95 = ("
              << fmt_real(fit.ci95[0].first) << ", " << fmt_real(fit.ci95[0].second) << ")\n";
    std::cout << "  p2 = " << fmt_real(fit.coefficients[1]) << "  ci95 = ("
              << fmt_real(fit.ci95[1].first) << ", " << fmt_real(fit.ci95[1].second) << ")\n";
    std::cout << "  SSE = " << fmt_real(fit.sse) << "  R^2 = " << fmt_real(fit.r_squared)
              << "  RMSE = " << fmt_real(fit.rmse) << "  n = " << fit.n_points << "\n";
}

void fit_psi(i64 xmax, const SieveTables& tables) {
    std::vector<double> xs, ys;
    for (i64 x = 2; x <= xmax; ++x) {
        xs.push_back(static_cast<double>(x));
        ys.push_back(psi(x, tables));
    }
    print_fit("linear fit of psi(x), x in [2, " + std::to_string(xmax) + "]", polyfit(xs, ys, 1));
}

void fit_w(i64 interval, i64 xmax, const ConventionFlags& flags, const SieveTables& tables,
           const std::vector<double>& l_pref) {
    CorollaryConfig cfg = make_config(interval, flags);
    IntervalCountSeries series = interval_counts(interval, xmax, tables, cfg.intervals);
    std::vector<double> xs, ys;
    for (i64 x = 2; x <= xmax; ++x) {
        xs.push_back(static_cast<double>(x));
        ys.push_back(weighted_log_sum(cfg, x, series, l_pref));
    }
    print_fit("linear fit of W_" + std::to_string(interval) + "(x), x in [2, " +
                  std::to_string(xmax) + "]  (" + describe(cfg) + ")",
              polyfit(xs, ys, 1));
}

int cmd_fit(const std::string& target, i64 interval, i64 xmax, const ConventionFlags& flags) {
    if (target == "all") {
        // The headline reports: psi and W_4 at 10000 and 25000, then the
        // per-I fits at 25000.
        i64 big = std::max<i64>(xmax, 25000);
        SieveTables tables = build_sieves(big);
        std::vector<double> l_pref = log_prefix(big);
        for (i64 range : {10000LL, big}) {
            fit_psi(range, tables);
            fit_w(4, range, flags, tables, l_pref);
        }
        for (i64 other : {5LL, 6LL, 7LL, 8LL}) fit_w(other, big, flags, tables, l_pref);
        return 0;
    }
    SieveTables tables = build_sieves(xmax);
    if (target == "psi") {
        fit_psi(xmax, tables);
        return 0;
    }
    std::vector<double> l_pref = log_prefix(xmax);
    fit_w(interval, xmax, flags, tables, l_pref);
    return 0;
}

// ---------------------------------------------------------------- franel --

int cmd_franel(i64 xmax, int threads, Output& out) {
    SieveTables tables = build_sieves(xmax);
    std::vector<i64> phi(static_cast<size_t>(xmax) + 1, 0);
    for (i64 x = 1; x <= xmax; ++x)
        phi[static_cast<size_t>(x)] = phi[static_cast<size_t>(x - 1)] + tables.phi(x);
    std::vector<std::string> rows(static_cast<size_t>(xmax));
    run_over_range(1, xmax, threads, [&](i64 x) {
        FranelSum f = franel_delta_sum(x, phi[static_cast<size_t>(x)]);
        std::ostringstream os;
        os << x << "," << fmt_real(f.value) << ","
           << fmt_real(f.value / std::sqrt(static_cast<double>(x)));
        rows[static_cast<size_t>(x - 1)] = os.str();
    });
    *out.stream << "x,delta_sum,delta_sum_over_sqrtx\n";
    for (const auto& row : rows) *out.stream << row << "\n";
    return 0;
}

// ------------------------------------------------------------ conjecture --

int cmd_conjecture(i64 interval, i64 xmax, double slope, bool slope_given,
                   const ConventionFlags& flags, Output& out) {
    SieveTables tables = build_sieves(xmax);
    CorollaryConfig cfg = make_config(interval, flags);
    IntervalCountSeries series = interval_counts(interval, xmax, tables, cfg.intervals);
    std::vector<double> l_pref = log_prefix(xmax);

    std::vector<double> w(static_cast<size_t>(xmax) + 1, 0.0);
    for (i64 x = 2; x <= xmax; ++x)
        w[static_cast<size_t>(x)] = weighted_log_sum(cfg, x, series, l_pref);

    if (!slope_given) {
        std::vector<double> xs, ys;
        for (i64 x = 2; x <= xmax; ++x) {
            xs.push_back(static_cast<double>(x));
            ys.push_back(w[static_cast<size_t>(x)]);
        }
        slope = polyfit(xs, ys, 1).coefficients[0];
    }

    double max_w = 0.0, max_psi = 0.0;
    std::ostream& info = out.stream == &std::cout ? std::cerr : std::cout;
    *out.stream << "x,w_residual,psi_residual\n";
    for (i64 x = 2; x <= xmax; ++x) {
        double rw = w[static_cast<size_t>(x)] - slope * static_cast<double>(x);
        double rp = psi(x, tables) - static_cast<double>(x);
        double sq = std::sqrt(static_cast<double>(x));
        max_w = std::max(max_w, std::fabs(rw) / sq);
        max_psi = std::max(max_psi, std::fabs(rp) / sq);
        *out.stream << x << "," << fmt_real(rw) << "," << fmt_real(rp) << "\n";
    }
    info << "slope = " << fmt_real(slope) << (slope_given ? " (given)" : " (fitted)") << "\n";
    info << "max |W_" << interval << "(x) - slope*x| / sqrt(x) = " << fmt_real(max_w) << "\n";
    info << "max |psi(x) - x| / sqrt(x) = " << fmt_real(max_psi) << "\n";
    return 0;
}

// ---------------------------------------------------------------- matrix --

int cmd_matrix(const std::string& kind, i64 n, bool with_det, Output& out) {
    SieveTables tables = build_sieves(n);
    MertensTable mt = mertens_table(tables);
    IntMatrix m;
    if (kind == "rprime")
        m = build_rprime(n);
    else if (kind == "redheffer")
        m = build_redheffer(n);
    else if (kind == "t")
        m = build_T(n, mt);
    else
        m = build_U(n, mt, tables);
    for (i64 i = 1; i <= n; ++i) {
        for (i64 j = 1; j <= n; ++j) {
            if (j > 1) *out.stream << ' ';
            *out.stream << m.at(i, j);
        }
        *out.stream << "\n";
    }
    if (with_det) *out.stream << "det = " << det_exact(m).str() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Farey sequence / Mertens function identity checks, sweeps and fits"};
    app.require_subcommand(1);

    static constexpr i64 kXmaxCap = 2000000;

    // verify
    std::string suite = "all";
    i64 vx = 10000;
    CLI::App* verify = app.add_subcommand("verify", "run an identity verification suite");
    verify->add_option("--suite", suite, "identities|rank|count|matrix|residues|all")
        ->check(CLI::IsMember({"identities", "rank", "count", "matrix", "residues", "all"}));
    verify->add_option("--xmax", vx, "upper bound of the sweep")
        ->check(CLI::Range(static_cast<i64>(2), kXmaxCap));

    // sweep
    int figure = 2;
    i64 sx = 0, imin = 0, imax = 0, sweep_interval = 4;
    int threads = 1;
    std::string sweep_out = "-";
    ConventionFlags sweep_conv;
    CLI::App* sweep = app.add_subcommand("sweep", "emit a figure data series as CSV");
    sweep->add_option("--figure", figure,
                      "1: residue lines, 2: psi and W_I, 3: even-I slopes, 4: odd-I slopes")
        ->required()
        ->check(CLI::Range(1, 4));
    sweep->add_option("--xmax", sx, "upper bound (default 10000; 25000 for figures 3/4)")
        ->check(CLI::Range(static_cast<i64>(2), kXmaxCap));
    sweep->add_option("--imin", imin, "smallest I (figures 3/4; default 4 or 5)")
        ->check(CLI::Range(static_cast<i64>(3), static_cast<i64>(1000)));
    sweep->add_option("--imax", imax, "largest I (figures 3/4; default 20 or 21)")
        ->check(CLI::Range(static_cast<i64>(3), static_cast<i64>(1000)));
    sweep->add_option("--I", sweep_interval, "interval parameter for figure 2 (default 4)")
        ->check(CLI::Range(static_cast<i64>(3), static_cast<i64>(1000)));
    sweep->add_option("--threads", threads, "worker threads for per-x sweeps")
        ->check(CLI::Range(1, 64));
    sweep->add_option("--out", sweep_out, "output path ('-' = stdout)");
    add_convention_flags(sweep, sweep_conv);

    // census
    i64 census_interval = 4, cx = 2000;
    std::string census_out;
    ConventionFlags census_conv;
    CLI::App* census = app.add_subcommand("census", "observed S_I value sets per convention");
    census->add_option("--I", census_interval, "interval parameter I")
        ->required()
        ->check(CLI::Range(static_cast<i64>(3), static_cast<i64>(1000)));
    census->add_option("--xmax", cx, "census range [3, xmax]")
        ->check(CLI::Range(static_cast<i64>(3), kXmaxCap));
    census->add_option("--out", census_out, "CSV path for the selected convention's census");
    add_convention_flags(census, census_conv);

    // fit
    std::string target = "psi";
    i64 fit_interval = 4, fx = 10000;
    ConventionFlags fit_conv;
    CLI::App* fit = app.add_subcommand("fit", "least-squares fit report");
    fit->add_option("--target", target, "psi|w|all")->check(CLI::IsMember({"psi", "w", "all"}));
    fit->add_option("--I", fit_interval, "interval parameter for target w")
        ->check(CLI::Range(static_cast<i64>(3), static_cast<i64>(1000)));
    fit->add_option("--xmax", fx, "fit range [2, xmax]")
        ->check(CLI::Range(static_cast<i64>(4), kXmaxCap));
    add_convention_flags(fit, fit_conv);

    // franel
    i64 frx = 2000;
    int franel_threads = 1;
    std::string franel_out = "-";
    CLI::App* franel = app.add_subcommand("franel", "Franel-Landau delta sums as CSV");
    franel->add_option("--xmax", frx, "emit rows for x in [1, xmax]")
        ->check(CLI::Range(static_cast<i64>(2), static_cast<i64>(100000)));
    franel->add_option("--threads", franel_threads, "worker threads")->check(CLI::Range(1, 64));
    franel->add_option("--out", franel_out, "output path ('-' = stdout)");

    // conjecture
    i64 conj_interval = 4, cjx = 25000;
    double conj_slope = 0.0;
    std::string conj_out = "-";
    ConventionFlags conj_conv;
    CLI::App* conj =
        app.add_subcommand("conjecture", "residuals W_I(x) - slope*x alongside psi(x) - x");
    conj->add_option("--I", conj_interval, "interval parameter")
        ->check(CLI::Range(static_cast<i64>(3), static_cast<i64>(1000)));
    conj->add_option("--xmax", cjx, "residual range [2, xmax]")
        ->check(CLI::Range(static_cast<i64>(4), kXmaxCap));
    CLI::Option* slope_opt =
        conj->add_option("--slope", conj_slope, "use this slope instead of fitting W_I");
    conj->add_option("--out", conj_out, "output path ('-' = stdout)");
    add_convention_flags(conj, conj_conv);

    // matrix
    std::string kind = "redheffer";
    i64 mn = 12;
    bool with_det = false;
    std::string matrix_out = "-";
    CLI::App* matrix = app.add_subcommand("matrix", "emit a matrix as space-separated rows");
    matrix->add_option("--kind", kind, "rprime|redheffer|t|u")
        ->check(CLI::IsMember({"rprime", "redheffer", "t", "u"}));
    matrix->add_option("--n", mn, "dimension (equals x for t/u)")
        ->required()
        ->check(CLI::Range(static_cast<i64>(1), static_cast<i64>(2000)));
    matrix->add_flag("--det", with_det, "append the exact determinant");
    matrix->add_option("--out", matrix_out, "output path ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) return cmd_verify(suite, vx);
        if (*sweep) {
            Output out;
            if (!out.open(sweep_out)) return 1;
            if (figure == 1) return cmd_sweep_figure1(sx ? sx : 10000, threads, out);
            if (figure == 2)
                return cmd_sweep_figure2(sx ? sx : 10000, sweep_interval, sweep_conv, threads, out);
            i64 lo = imin ? imin : (figure == 3 ? 4 : 5);
            i64 hi = imax ? imax : (figure == 3 ? 20 : 21);
            return cmd_sweep_slopes(figure, lo, hi, sx ? sx : 25000, sweep_conv, out);
        }
        if (*census) {
            Output out;
            bool have_out = !census_out.empty();
            if (have_out && !out.open(census_out)) return 1;
            return cmd_census(census_interval, cx, census_conv, out, have_out);
        }
        if (*fit) return cmd_fit(target, fit_interval, fx, fit_conv);
        if (*franel) {
            Output out;
            if (!out.open(franel_out)) return 1;
            return cmd_franel(frx, franel_threads, out);
        }
        if (*conj) {
            Output out;
            if (!out.open(conj_out)) return 1;
            return cmd_conjecture(conj_interval, cjx, conj_slope, slope_opt->count() > 0, conj_conv,
                                  out);
        }
        if (*matrix) {
            Output out;
            if (!out.open(matrix_out)) return 1;
            return cmd_matrix(kind, mn, with_det, out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
