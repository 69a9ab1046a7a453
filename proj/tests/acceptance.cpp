// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Every tolerance and time budget is pinned here, not read from anywhere.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "qfrac/qfrac.hpp"

using namespace qfrac;

namespace {

struct Criterion {
    int number;
    const char* summary;
    double budget_ms;
    bool (*body)(std::string& detail);
};

double rel_err(double got, double want) {
    const double denom = std::fabs(want);
    return denom == 0.0 ? std::fabs(got) : std::fabs(got - want) / denom;
}

// 1. Fractional-integral quadrature agrees with the closed-form power rule
//    over the full base/order/exponent grid.
bool power_rule_grid(std::string& detail) {
    constexpr double kRelTol = 1e-8;
    const double qs[3] = {0.3, 0.5, 0.8};
    const double alphas[4] = {0.3, 0.5, 1.2, 2.5};
    const double mus[4] = {0.0, 0.5, 1.0, 2.0};
    double worst = 0.0;
    for (const double q : qs) {
        const QContext ctx(q);
        for (const double alpha : alphas) {
            for (const double mu : mus) {
                const GridFunction f = make_q_power(ctx, 0.0, mu);
                const double got = riemann_q_integral_frac(ctx, f, 0.0, alpha, 1.0).value;
                const double want = power_rule_closed_form(ctx, alpha, mu);
                worst = std::max(worst, rel_err(got, want));
            }
        }
    }
    std::ostringstream os;
    os << "48 combos, worst relative error " << worst;
    detail = os.str();
    return worst <= kRelTol;
}

// 2. The first-order identity suites hold over 200 seeded cases each:
//    absolute error for the integral/derivative/product identities,
//    relative error for the factorial-power laws.
bool core_identities(std::string& detail) {
    constexpr double kTol = 1e-9;
    const char* suites[7] = {"ftc",       "cfq",       "product_rule", "lemma1_i",
                             "lemma1_ii", "lemma1_iii", "lemma1_iv"};
    const QContext ctx(0.5);
    double worst = 0.0;
    std::string worst_name;
    for (const char* name : suites) {
        const SuiteReport r = run_suite(ctx, name, 42, 200);
        if (!r.passed) {
            detail = std::string(name) + " failed its own tolerance";
            return false;
        }
        if (r.max_error > worst) {
            worst = r.max_error;
            worst_name = name;
        }
    }
    std::ostringstream os;
    os << "7 suites x 200 cases, worst " << worst << " (" << worst_name << ")";
    detail = os.str();
    return worst <= kTol;
}

// 3. The Taylor-remainder inversion holds to 1e-8 at 20 grid points per
//    case across both order branches and the polynomial/q-power family.
bool taylor_inversion(std::string& detail) {
    constexpr double kTol = 1e-8;
    const QContext ctx(0.5);
    const SuiteReport r = run_suite(ctx, "prop1", 42, 25);
    std::ostringstream os;
    os << "25 cases over orders {0.3, 0.5, 0.9, 1.5, 2.5}, worst residual " << r.max_error;
    detail = os.str();
    return r.passed && r.max_error <= kTol;
}

// 4. The generalized series at unit stride matches the double-index series
//    times the constant q-Gamma factor over the convergent grid.
bool series_reduction(std::string& detail) {
    constexpr double kRelTol = 1e-10;
    const QContext ctx(0.5);
    const SuiteReport r = run_suite(ctx, "remark_sp", 0, 54);
    std::ostringstream os;
    os << "54 combos, worst relative deviation " << r.max_error;
    detail = os.str();
    return r.passed && r.max_error <= kRelTol;
}

// 5. Successive approximation reproduces the closed-form coefficients for
//    every iteration depth, and the closed form satisfies the coefficient
//    recurrence, including in the divergent regime.
bool solver_algebra(std::string& detail) {
    constexpr double kIterRelTol = 1e-12;
    constexpr double kResidualTol = 1e-11;
    const double qs[3] = {0.3, 0.5, 0.8};
    const double alphas[3] = {0.3, 0.5, 0.7};
    const double betas[4] = {-0.2, 0.0, 0.5, 1.0};
    const double lambdas[4] = {0.5, -0.5, 2.0, -2.0};

    long double worst_iter = 0.0L;
    double worst_residual = 0.0;
    for (const double q : qs) {
        const QContext ctx(q);
        for (const double alpha : alphas) {
            for (const double beta : betas) {
                for (const double lambda : lambdas) {
                    const IVPSpec spec(alpha, beta, 0.0, lambda, {1.0});
                    for (long m = 0; m <= 12; ++m) {
                        const FormalQSeries iter = successive_approximation(ctx, spec, m);
                        const FormalQSeries closed = closed_form_series(ctx, spec, m);
                        if (iter.terms.size() != closed.terms.size()) {
                            detail = "term count mismatch";
                            return false;
                        }
                        for (std::size_t i = 0; i < iter.terms.size(); ++i) {
                            const long double d =
                                fabsl(iter.terms[i].coeff - closed.terms[i].coeff) /
                                fabsl(closed.terms[i].coeff);
                            worst_iter = std::max(worst_iter, d);
                        }
                    }
                    const FormalQSeries s = closed_form_series(ctx, spec, 40);
                    worst_residual =
                        std::max(worst_residual, coefficient_residual(ctx, spec, s));
                }
            }
        }
    }
    std::ostringstream os;
    os << "144 combos, worst iteration defect " << static_cast<double>(worst_iter)
       << ", worst recurrence residual " << worst_residual;
    detail = os.str();
    return worst_iter <= static_cast<long double>(kIterRelTol) &&
           worst_residual <= kResidualTol;
}

// 6. The solution series satisfies the equation under full quadrature in
//    the convergent regime, and the memoryless case matches the
//    double-index series pointwise.
bool solver_numerics(std::string& detail) {
    constexpr double kResidualTol = 1e-8;
    constexpr double kCrossRelTol = 1e-10;
    const QContext ctx(0.5);
    const double points[3] = {0.25, 0.5, 1.0};

    double worst_residual = 0.0;
    double worst_cross = 0.0;

    const IVPSpec memoryless(0.5, 0.0, 0.0, 0.2, {1.0});
    const FormalQSeries sm = closed_form_series(ctx, memoryless, 60);
    const MLDoubleParams mp{0.5, 1.0, 0.2, 0.0};
    for (const double x : points) {
        worst_residual = std::max(worst_residual, numeric_residual(ctx, memoryless, sm, x));
        const double got = evaluate_series(ctx, sm, x).value;
        const double want = ml_double_eval(ctx, mp, x).value;
        worst_cross = std::max(worst_cross, rel_err(got, want));
    }

    const IVPSpec weighted(0.5, -0.25, 0.0, 0.2, {1.0});
    const FormalQSeries sw = closed_form_series(ctx, weighted, 60);
    for (const double x : points) {
        worst_residual = std::max(worst_residual, numeric_residual(ctx, weighted, sw, x));
    }

    std::ostringstream os;
    os << "worst equation residual " << worst_residual << ", worst series cross-check "
       << worst_cross;
    detail = os.str();
    return worst_residual <= kResidualTol && worst_cross <= kCrossRelTol;
}

// 7. Multi-order problems: each chain leads with b_r / Gamma_q(r+1) and
//    satisfies the per-chain coefficient recurrence.
bool multi_order_chains(std::string& detail) {
    constexpr double kLeadRelTol = 1e-12;
    constexpr double kResidualTol = 1e-11;
    const QContext ctx(0.5);
    const double pinned[2][2] = {{1.5, 0.25}, {1.7, -0.3}};

    double worst_lead = 0.0;
    double worst_residual = 0.0;
    for (const auto& pr : pinned) {
        const IVPSpec spec(pr[0], pr[1], 0.0, 0.5, {1.0, 0.5});
        const std::vector<FormalQSeries> chains = closed_form_components(ctx, spec, 25);
        if (chains.size() != 2) {
            detail = "expected two chains";
            return false;
        }
        for (std::size_t r = 0; r < chains.size(); ++r) {
            const double lead = static_cast<double>(chains[r].terms.at(0).coeff);
            const double want = spec.b[r] / q_gamma(ctx, static_cast<double>(r) + 1.0);
            worst_lead = std::max(worst_lead, rel_err(lead, want));
            worst_residual =
                std::max(worst_residual, coefficient_residual(ctx, spec, chains[r]));
        }
    }
    std::ostringstream os;
    os << "2 pinned problems, worst leading-coefficient defect " << worst_lead
       << ", worst recurrence residual " << worst_residual;
    detail = os.str();
    return worst_lead <= kLeadRelTol && worst_residual <= kResidualTol;
}

// 8. Divergent regimes raise instead of returning a finite value: the
//    generalized series for stride above one, series evaluation for
//    positive forcing exponent, and the CLI surfaces both as exit code 2.
bool divergence_guard(std::string& detail) {
    const QContext ctx(0.5, 1e-14, 1e-12, 50);

    bool gml_raised = false;
    try {
        const GMLParams p{0.5, 2.0, 1.0, 1.0, 0.0, 0};
        const ValueReport r = gml_eval(ctx, p, 1.0);
        std::ostringstream os;
        os << "stride-2 series returned " << r.value << " silently";
        detail = os.str();
        return false;
    } catch (const Divergence&) {
        gml_raised = true;
    }

    bool series_raised = false;
    try {
        const IVPSpec spec(0.5, 0.5, 0.0, 2.0, {1.0});
        const FormalQSeries s = closed_form_series(ctx, spec, 60);
        const ValueReport r = evaluate_series(ctx, s, 1.0);
        std::ostringstream os;
        os << "divergent chain evaluated to " << r.value << " silently";
        detail = os.str();
        return false;
    } catch (const Divergence&) {
        series_raised = true;
    }

    std::ostringstream out;
    std::ostringstream err;
    const int gml_code = cli::dispatch(
        {"eval", "gml", "--q", "0.5", "--alpha", "0.5", "--m", "2", "--l", "1",
         "--lambda", "1", "--a", "0", "--x", "1", "--r", "0", "--max-terms", "50"},
        out, err);
    const int solve_code = cli::dispatch(
        {"solve", "--q", "0.5", "--alpha", "0.5", "--beta", "0.5", "--lambda", "2",
         "--a", "0", "--b", "1", "--points", "4", "--max-terms", "50"},
        out, err);

    std::ostringstream os;
    os << "library raises, CLI exits " << gml_code << " and " << solve_code;
    detail = os.str();
    return gml_raised && series_raised && gml_code == 2 && solve_code == 2;
}

constexpr Criterion kCriteria[] = {
    {1, "power rule quadrature vs closed form", 2000.0, power_rule_grid},
    {2, "first-order identity suites", 5000.0, core_identities},
    {3, "Taylor-remainder inversion", 5000.0, taylor_inversion},
    {4, "series reduction at unit stride", 2000.0, series_reduction},
    {5, "solver coefficient algebra", 5000.0, solver_algebra},
    {6, "solver quadrature residuals", 3000.0, solver_numerics},
    {7, "multi-order chain structure", 3000.0, multi_order_chains},
    {8, "divergence guard", 1000.0, divergence_guard},
};

} // namespace

int main() {
    int failures = 0;
    for (const Criterion& c : kCriteria) {
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("unexpected exception: ") + e.what();
            ok = false;
        }
        const auto stop = std::chrono::steady_clock::now();
        const double ms =
            std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count() /
            1000.0;
        const bool in_budget = ms < c.budget_ms;
        if (!in_budget && !detail.empty()) {
            detail += "; ";
        }
        if (!in_budget) {
            detail += "over the " + std::to_string(static_cast<long>(c.budget_ms)) +
                      " ms budget";
        }
        const bool pass = ok && in_budget;
        std::printf("criterion %d %s (%7.1f ms) %s: %s\n", c.number,
                    pass ? "PASS" : "FAIL", ms, c.summary, detail.c_str());
        if (!pass) ++failures;
    }
    return failures;
}
