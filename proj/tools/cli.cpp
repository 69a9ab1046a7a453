#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfrac/qfrac.hpp"

namespace qfrac::cli {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Shared flags; every leaf command carries them.
struct CommonOpts {
    double q = 0.5;
    double tol = 0.0;           // 0 means unset, keep the context defaults
    long max_terms = 10000;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--q", c.q, "grid base, 0 < q < 1");
    cmd->add_option("--tol", c.tol,
                    "truncation tolerance, applied as both the absolute and the relative bound");
    cmd->add_option("--max-terms", c.max_terms, "series term budget");
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
}

QContext make_context(const CommonOpts& c) {
    if (!(c.q > 0.0) || !(c.q < 1.0)) {
        throw DomainError("--q must satisfy 0 < q < 1");
    }
    if (c.tol < 0.0) {
        throw DomainError("--tol must be positive when given");
    }
    if (c.max_terms < 1) {
        throw DomainError("--max-terms must be at least 1");
    }
    if (c.tol != 0.0) {
        return QContext(c.q, c.tol, c.tol, c.max_terms);
    }
    return QContext(c.q, 1e-14, 1e-12, c.max_terms);
}

json context_params(const QContext& ctx) {
    return json{{"q", ctx.q},
                {"tol_abs", ctx.tol_abs},
                {"tol_rel", ctx.tol_rel},
                {"max_terms", ctx.max_terms}};
}

json truncation_block(const TruncationReport& t) {
    return json{{"terms_used", t.terms_used},
                {"est_error", t.est_error},
                {"converged", t.converged}};
}

void emit_scalar(std::ostream& out, const std::string& command, json params,
                 const ValueReport& vr, const std::string& format) {
    if (format == "csv") {
        out << "result,terms_used,est_error,converged\n"
            << fmt17(vr.value) << ',' << vr.trunc.terms_used << ',' << fmt17(vr.trunc.est_error)
            << ',' << (vr.trunc.converged ? "true" : "false") << '\n';
        return;
    }
    json j;
    j["command"] = command;
    j["params"] = std::move(params);
    j["result"] = vr.value;
    j["truncation"] = truncation_block(vr.trunc);
    out << j.dump(2) << '\n';
}

struct SolveRow {
    double x;
    double y;
    double residual;
};

void emit_table(std::ostream& out, const std::string& command, json params,
                const std::vector<SolveRow>& rows, const TruncationReport& agg,
                const std::string& format) {
    if (format == "csv") {
        out << "x,y,residual\n";
        for (const auto& row : rows) {
            out << fmt17(row.x) << ',' << fmt17(row.y) << ',' << fmt17(row.residual) << '\n';
        }
        return;
    }
    json table = json::array();
    for (const auto& row : rows) {
        table.push_back(json{{"x", row.x}, {"y", row.y}, {"residual", row.residual}});
    }
    json j;
    j["command"] = command;
    j["params"] = std::move(params);
    j["result"] = std::move(table);
    j["truncation"] = truncation_block(agg);
    out << j.dump(2) << '\n';
}

void emit_suite(std::ostream& out, json params, const SuiteReport& report,
                const std::string& format) {
    if (format == "csv") {
        out << "suite,seed,cases,tolerance,max_error,passed,failures\n"
            << report.suite << ',' << report.seed << ',' << report.cases << ','
            << fmt17(report.tolerance) << ',' << fmt17(report.max_error) << ','
            << (report.passed ? "true" : "false") << ',' << report.failures.size() << '\n';
        return;
    }
    json failures = json::array();
    for (const auto& f : report.failures) {
        failures.push_back(json{{"index", f.index}, {"error", f.error}, {"replay", f.replay}});
    }
    json result;
    result["suite"] = report.suite;
    result["seed"] = report.seed;
    result["cases"] = report.cases;
    result["tolerance"] = report.tolerance;
    result["max_error"] = report.max_error;
    result["passed"] = report.passed;
    result["failures"] = std::move(failures);
    json j;
    j["command"] = "verify";
    j["params"] = std::move(params);
    j["result"] = std::move(result);
    out << j.dump(2) << '\n';
}

void emit_registry(std::ostream& out, json params, const std::string& format) {
    if (format == "csv") {
        out << "name,tolerance,relative,default_cases,description\n";
        for (const auto& d : suite_registry()) {
            out << d.name << ',' << fmt17(d.tolerance) << ',' << (d.relative ? "true" : "false")
                << ',' << d.default_cases << ",\"" << d.description << "\"\n";
        }
        return;
    }
    json table = json::array();
    for (const auto& d : suite_registry()) {
        table.push_back(json{{"name", d.name},
                             {"description", d.description},
                             {"tolerance", d.tolerance},
                             {"relative", d.relative},
                             {"default_cases", d.default_cases}});
    }
    json j;
    j["command"] = "verify";
    j["params"] = std::move(params);
    j["result"] = std::move(table);
    out << j.dump(2) << '\n';
}

// Built-in function family for the operator commands.
GridFunction family_function(const QContext& ctx, double a, bool have_poly,
                             const std::vector<double>& coeffs, bool have_qpow, double mu) {
    if (have_poly == have_qpow) {
        throw DomainError("exactly one of --poly and --qpow is required");
    }
    if (have_poly) {
        return make_polynomial(coeffs);
    }
    return make_q_power(ctx, a, mu);
}

long env_max_terms() {
    const char* raw = std::getenv("QFRAC_MAX_TERMS");
    if (raw == nullptr) {
        return 10000;
    }
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 1) {
        throw DomainError("QFRAC_MAX_TERMS must be a positive integer");
    }
    return v;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"q-fractional calculus: evaluate, solve, verify", "qfrac"};
    app.require_subcommand(1);

    long default_terms = 10000;
    try {
        default_terms = env_max_terms();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    auto* eval = app.add_subcommand("eval", "evaluate a function or operator");
    eval->require_subcommand(1);

    CommonOpts gamma_c;
    gamma_c.max_terms = default_terms;
    double gamma_x = 0.0;
    auto* gamma_cmd = eval->add_subcommand("gamma", "q-Gamma function");
    add_common(gamma_cmd, gamma_c);
    gamma_cmd->add_option("--x", gamma_x, "argument")->required();

    CommonOpts qfact_c;
    qfact_c.max_terms = default_terms;
    double qfact_t = 0.0;
    double qfact_s = 0.0;
    double qfact_g = 0.0;
    auto* qfact_cmd = eval->add_subcommand("qfact", "q-factorial power (t - s)^gamma");
    add_common(qfact_cmd, qfact_c);
    qfact_cmd->add_option("--t", qfact_t, "first argument")->required();
    qfact_cmd->add_option("--s", qfact_s, "second argument")->required();
    qfact_cmd->add_option("--gamma", qfact_g, "exponent")->required();

    CommonOpts ml_c;
    ml_c.max_terms = default_terms;
    MLDoubleParams ml_p{0.0, 0.0, 0.0, 0.0};
    double ml_x = 0.0;
    auto* ml_cmd = eval->add_subcommand("ml", "double-index q-Mittag-Leffler function");
    add_common(ml_cmd, ml_c);
    ml_cmd->add_option("--alpha", ml_p.alpha, "first index, > 0")->required();
    ml_cmd->add_option("--beta", ml_p.beta, "second index")->required();
    ml_cmd->add_option("--lambda", ml_p.lambda, "series parameter")->required();
    ml_cmd->add_option("--z0", ml_p.z0, "lower point, >= 0");
    ml_cmd->add_option("--x", ml_x, "evaluation point, >= z0")->required();

    CommonOpts gml_c;
    gml_c.max_terms = default_terms;
    GMLParams gml_p{0.0, 0.0, 0.0, 0.0, 0.0, 0};
    double gml_x = 0.0;
    long gml_terms = -1;
    auto* gml_cmd = eval->add_subcommand("gml", "generalized q-Mittag-Leffler function");
    add_common(gml_cmd, gml_c);
    gml_cmd->add_option("--alpha", gml_p.alpha, "order, > 0")->required();
    gml_cmd->add_option("--m", gml_p.m, "index stride, > 0")->required();
    gml_cmd->add_option("--l", gml_p.l, "index offset")->required();
    gml_cmd->add_option("--lambda", gml_p.lambda, "series parameter")->required();
    gml_cmd->add_option("--a", gml_p.a, "lower point, >= 0");
    gml_cmd->add_option("--r", gml_p.r, "order shift, nonnegative integer");
    gml_cmd->add_option("--x", gml_x, "evaluation point, >= a")->required();
    gml_cmd->add_option("--terms", gml_terms, "fixed partial-sum length instead of adaptive");

    CommonOpts cap_c;
    cap_c.max_terms = default_terms;
    double cap_alpha = 0.0;
    double cap_a = 0.0;
    double cap_t = 0.0;
    std::vector<double> cap_poly;
    double cap_mu = 0.0;
    auto* cap_cmd = eval->add_subcommand("caputo", "Caputo q-fractional derivative");
    add_common(cap_cmd, cap_c);
    cap_cmd->add_option("--alpha", cap_alpha, "order, >= 0")->required();
    cap_cmd->add_option("--a", cap_a, "lower limit, >= 0");
    cap_cmd->add_option("--t", cap_t, "evaluation point")->required();
    auto* cap_poly_opt =
        cap_cmd->add_option("--poly", cap_poly, "polynomial coefficients c0,c1,...")
            ->delimiter(',');
    auto* cap_qpow_opt = cap_cmd->add_option("--qpow", cap_mu, "q-power exponent mu");

    CommonOpts int_c;
    int_c.max_terms = default_terms;
    double int_alpha = 0.0;
    double int_a = 0.0;
    double int_t = 0.0;
    std::vector<double> int_poly;
    double int_mu = 0.0;
    auto* int_cmd = eval->add_subcommand("integral", "Riemann q-fractional integral");
    add_common(int_cmd, int_c);
    int_cmd->add_option("--alpha", int_alpha, "order, > 0")->required();
    int_cmd->add_option("--a", int_a, "lower limit, >= 0");
    int_cmd->add_option("--t", int_t, "upper limit")->required();
    auto* int_poly_opt =
        int_cmd->add_option("--poly", int_poly, "polynomial coefficients c0,c1,...")
            ->delimiter(',');
    auto* int_qpow_opt = int_cmd->add_option("--qpow", int_mu, "q-power exponent mu");

    CommonOpts solve_c;
    solve_c.max_terms = default_terms;
    double solve_alpha = 0.0;
    double solve_beta = 0.0;
    double solve_a = 0.0;
    double solve_lambda = 0.0;
    std::vector<double> solve_b;
    long solve_kmax = 60;
    long solve_points = 8;
    auto* solve_cmd = app.add_subcommand("solve", "solve the Caputo q-fractional IVP");
    add_common(solve_cmd, solve_c);
    solve_cmd->add_option("--alpha", solve_alpha, "order, > 0 and non-integer")->required();
    solve_cmd->add_option("--beta", solve_beta, "forcing exponent, > -alpha")->required();
    solve_cmd->add_option("--a", solve_a, "lower limit, >= 0");
    solve_cmd->add_option("--lambda", solve_lambda, "forcing coefficient")->required();
    solve_cmd->add_option("--b", solve_b, "initial values b0,b1,...")->delimiter(',')->required();
    solve_cmd->add_option("--kmax", solve_kmax, "series terms per chain");
    solve_cmd->add_option("--points", solve_points, "number of output grid points");

    CommonOpts ver_c;
    ver_c.max_terms = default_terms;
    std::string ver_suite;
    std::uint64_t ver_seed = 42;
    long ver_cases = -1;
    bool ver_list = false;
    bool ver_classical = false;
    auto* ver_cmd = app.add_subcommand("verify", "run a property suite");
    add_common(ver_cmd, ver_c);
    auto* ver_suite_opt = ver_cmd->add_option("--suite", ver_suite, "suite name");
    ver_cmd->add_option("--seed", ver_seed, "base case key");
    ver_cmd->add_option("--cases", ver_cases, "case count, >= 1 (default per suite)");
    auto* ver_list_opt = ver_cmd->add_flag("--list", ver_list, "print the suite registry");
    ver_cmd->add_flag("--classical-gamma", ver_classical,
                      "rerun prop1 with the classical-Gamma Caputo variant (expected to fail)");
    ver_list_opt->excludes(ver_suite_opt);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (app.got_subcommand(eval)) {
            if (eval->got_subcommand(gamma_cmd)) {
                const QContext ctx = make_context(gamma_c);
                json params = context_params(ctx);
                params["x"] = gamma_x;
                emit_scalar(out, "eval gamma", std::move(params),
                            detail::q_gamma_reported(ctx, gamma_x), gamma_c.format);
            } else if (eval->got_subcommand(qfact_cmd)) {
                const QContext ctx = make_context(qfact_c);
                json params = context_params(ctx);
                params["t"] = qfact_t;
                params["s"] = qfact_s;
                params["gamma"] = qfact_g;
                emit_scalar(out, "eval qfact", std::move(params),
                            detail::q_factorial_power_reported(ctx, qfact_t, qfact_s, qfact_g),
                            qfact_c.format);
            } else if (eval->got_subcommand(ml_cmd)) {
                const QContext ctx = make_context(ml_c);
                json params = context_params(ctx);
                params["alpha"] = ml_p.alpha;
                params["beta"] = ml_p.beta;
                params["lambda"] = ml_p.lambda;
                params["z0"] = ml_p.z0;
                params["x"] = ml_x;
                emit_scalar(out, "eval ml", std::move(params), ml_double_eval(ctx, ml_p, ml_x),
                            ml_c.format);
            } else if (eval->got_subcommand(gml_cmd)) {
                const QContext ctx = make_context(gml_c);
                json params = context_params(ctx);
                params["alpha"] = gml_p.alpha;
                params["m"] = gml_p.m;
                params["l"] = gml_p.l;
                params["lambda"] = gml_p.lambda;
                params["a"] = gml_p.a;
                params["r"] = gml_p.r;
                params["x"] = gml_x;
                const EvalMode mode =
                    gml_terms < 0 ? EvalMode::adaptive() : EvalMode::fixed(gml_terms);
                if (gml_terms >= 0) {
                    params["terms"] = gml_terms;
                }
                emit_scalar(out, "eval gml", std::move(params), gml_eval(ctx, gml_p, gml_x, mode),
                            gml_c.format);
            } else if (eval->got_subcommand(cap_cmd)) {
                const QContext ctx = make_context(cap_c);
                json params = context_params(ctx);
                params["alpha"] = cap_alpha;
                params["a"] = cap_a;
                params["t"] = cap_t;
                const bool have_poly = cap_poly_opt->count() > 0;
                const bool have_qpow = cap_qpow_opt->count() > 0;
                if (have_poly) params["poly"] = cap_poly;
                if (have_qpow) params["qpow"] = cap_mu;
                const GridFunction f =
                    family_function(ctx, cap_a, have_poly, cap_poly, have_qpow, cap_mu);
                emit_scalar(out, "eval caputo", std::move(params),
                            caputo_q_derivative(ctx, f, cap_a, cap_alpha, cap_t), cap_c.format);
            } else {
                const QContext ctx = make_context(int_c);
                json params = context_params(ctx);
                params["alpha"] = int_alpha;
                params["a"] = int_a;
                params["t"] = int_t;
                const bool have_poly = int_poly_opt->count() > 0;
                const bool have_qpow = int_qpow_opt->count() > 0;
                if (have_poly) params["poly"] = int_poly;
                if (have_qpow) params["qpow"] = int_mu;
                const GridFunction f =
                    family_function(ctx, int_a, have_poly, int_poly, have_qpow, int_mu);
                emit_scalar(out, "eval integral", std::move(params),
                            riemann_q_integral_frac(ctx, f, int_a, int_alpha, int_t),
                            int_c.format);
            }
            return 0;
        }

        if (app.got_subcommand(solve_cmd)) {
            const QContext ctx = make_context(solve_c);
            if (solve_points < 1) {
                throw DomainError("points must be at least 1");
            }
            if (solve_kmax < 0) {
                throw DomainError("kmax must be nonnegative");
            }
            const IVPSpec spec(solve_alpha, solve_beta, solve_a, solve_lambda, solve_b);
            const FormalQSeries series = closed_form_series(ctx, spec, solve_kmax);

            std::vector<double> grid(static_cast<std::size_t>(solve_points));
            for (long j = 0; j < solve_points; ++j) {
                // Ascending q-grid points: from a (or from q^{points-1} when
                // a = 0) up toward the largest point.
                grid[static_cast<std::size_t>(j)] =
                    solve_a == 0.0
                        ? std::pow(ctx.q, static_cast<double>(solve_points - 1 - j))
                        : solve_a * std::pow(ctx.q, static_cast<double>(-(j + 1)));
            }

            std::vector<SolveRow> rows;
            rows.reserve(grid.size());
            TruncationReport agg;
            for (const double x : grid) {
                const ValueReport y = evaluate_series(ctx, series, x);
                const double residual = numeric_residual(ctx, spec, series, x);
                rows.push_back(SolveRow{x, y.value, residual});
                agg.terms_used = std::max(agg.terms_used, y.trunc.terms_used);
                agg.est_error = std::max(agg.est_error, y.trunc.est_error);
                agg.converged = agg.converged && y.trunc.converged;
            }

            json params = context_params(ctx);
            params["alpha"] = solve_alpha;
            params["beta"] = solve_beta;
            params["a"] = solve_a;
            params["lambda"] = solve_lambda;
            params["b"] = solve_b;
            params["kmax"] = solve_kmax;
            params["points"] = solve_points;
            emit_table(out, "solve", std::move(params), rows, agg, solve_c.format);
            return 0;
        }

        // verify
        const QContext ctx = make_context(ver_c);
        json params = context_params(ctx);
        if (ver_list) {
            params["list"] = true;
            emit_registry(out, std::move(params), ver_c.format);
            return 0;
        }
        if (ver_suite_opt->count() == 0) {
            throw DomainError("either --suite or --list is required");
        }
        if (ver_classical && ver_suite != "prop1") {
            throw DomainError("--classical-gamma applies only to suite prop1");
        }
        const SuiteDescriptor& descriptor = find_suite(ver_suite);
        const long cases = ver_cases < 0 ? descriptor.default_cases : ver_cases;
        params["suite"] = ver_suite;
        params["seed"] = ver_seed;
        params["cases"] = cases;
        if (ver_classical) {
            params["classical_gamma"] = true;
        }
        const SuiteReport report = ver_classical
                                       ? run_taylor_suite_classical_gamma(ctx, ver_seed, cases)
                                       : run_suite(ctx, ver_suite, ver_seed, cases);
        emit_suite(out, std::move(params), report, ver_c.format);
        if (!report.passed) {
            err << "suite " << report.suite << ": " << report.failures.size() << " of "
                << report.cases << " cases failed\n";
            return 3;
        }
        return 0;
    } catch (const Divergence& e) {
        err << "divergence: " << e.what() << '\n';
        return 2;
    } catch (const NonConvergence& e) {
        err << "non-convergence: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace qfrac::cli
