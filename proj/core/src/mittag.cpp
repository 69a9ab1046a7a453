#include "qfrac/mittag.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qfrac {

namespace {

// Terms whose log magnitude exceeds this cannot be represented even in
// extended precision; reaching it means the series has blown up.
constexpr long double kLogTermCap = 11000.0L;

long double log_abs_or_ninf(double lambda) {
    return lambda == 0.0 ? -std::numeric_limits<long double>::infinity()
                         : logl(fabsl((long double)lambda));
}

void scan_gamma_pole_family(double alpha, double stride, double offset, const std::string& who) {
    // Arguments alpha (j stride + offset) + 1 increase in j; only values
    // below 1/2 can sit at a nonpositive-integer pole.
    for (long j = 0;; ++j) {
        const double arg = alpha * ((double)j * stride + offset) + 1.0;
        if (arg >= 0.5) break;
        if (detail::near_nonpositive_integer(arg))
            throw PoleError(who + ": Gamma_q argument " + std::to_string(arg) +
                            " hits a pole at term index " + std::to_string(j));
        if (j > 1000000)
            throw DomainError(who + ": parameters push Gamma_q arguments unboundedly negative");
    }
}

} // namespace

void validate_ml_params(const QContext&, const MLDoubleParams& p) {
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || !std::isfinite(p.lambda) ||
        !std::isfinite(p.z0))
        throw DomainError("ml: parameters must be finite");
    if (!(p.alpha > 0.0)) throw DomainError("ml: alpha must be positive");
    if (p.z0 < 0.0) throw DomainError("ml: z0 must be nonnegative");
    for (long k = 0;; ++k) {
        const double arg = p.alpha * (double)k + p.beta;
        if (arg >= 0.5) break;
        if (detail::near_nonpositive_integer(arg))
            throw PoleError("ml: Gamma_q argument alpha k + beta hits a pole at k = " +
                            std::to_string(k));
        if (k > 1000000) throw DomainError("ml: beta too far below zero");
    }
}

void validate_gml_params(const QContext&, const GMLParams& p) {
    if (!std::isfinite(p.alpha) || !std::isfinite(p.m) || !std::isfinite(p.l) ||
        !std::isfinite(p.lambda) || !std::isfinite(p.a))
        throw DomainError("gml: parameters must be finite");
    if (!(p.alpha > 0.0)) throw DomainError("gml: alpha must be positive");
    if (!(p.m > 0.0)) throw DomainError("gml: m must be positive");
    if (p.a < 0.0) throw DomainError("gml: a must be nonnegative");
    if (p.r < 0) throw DomainError("gml: order r must be nonnegative");
    scan_gamma_pole_family(p.alpha, p.m, p.l, "gml");
    scan_gamma_pole_family(p.alpha, p.m, p.l + 1.0, "gml");
}

ValueReport ml_double_eval(const QContext& ctx, const MLDoubleParams& p, double z) {
    validate_ml_params(ctx, p);
    if (z < p.z0) throw DomainError("ml: z must satisfy z >= z0");

    const long double llam = log_abs_or_ninf(p.lambda);
    long double sum = 0.0L;
    int small_in_a_row = 0;
    for (long k = 0; k < ctx.max_terms; ++k) {
        const detail::SignedLog lg = detail::log_q_gamma(ctx, p.alpha * (double)k + p.beta);
        const detail::SignedLog lp =
            detail::log_q_factorial_power(ctx, z, p.z0, p.alpha * (double)k);
        const long double la =
            (k == 0 ? 0.0L : (long double)k * llam) + lp.log_abs - lg.log_abs;
        if (la > kLogTermCap)
            throw NonConvergence("ml: series terms left floating-point range");
        int sign = lp.sign * lg.sign;
        if (p.lambda < 0.0 && (k & 1)) sign = -sign;
        const long double term = (long double)sign * expl(la);
        const long double mag = fabsl(term);
        if (mag <= (long double)ctx.tol_abs + (long double)ctx.tol_rel * fabsl(sum)) {
            if (++small_in_a_row == 3) {
                if (!std::isfinite((double)sum))
                    throw NonConvergence("ml: result exceeds double range");
                return {(double)sum, {k + 1, (double)mag, true}};
            }
        } else {
            small_in_a_row = 0;
        }
        sum += term;
    }
    throw NonConvergence("ml: series did not settle within max_terms");
}

namespace detail {

SignedLog log_gml_coefficient(const QContext& ctx, const GMLParams& p, long k) {
    if (k < 0) throw DomainError("gml_coefficient: k must be nonnegative");
    SignedLog out;
    for (long j = 0; j < k; ++j) {
        const double jm = (double)j * p.m;
        const SignedLog num = log_q_gamma(ctx, p.alpha * (jm + p.l) + 1.0);
        const SignedLog den = log_q_gamma(ctx, p.alpha * (jm + p.l + 1.0) + 1.0);
        out.log_abs += num.log_abs - den.log_abs;
        out.sign *= num.sign * den.sign;
    }
    return out;
}

} // namespace detail

double gml_coefficient(const QContext& ctx, const GMLParams& p, long k) {
    validate_gml_params(ctx, p);
    const detail::SignedLog c = detail::log_gml_coefficient(ctx, p, k);
    return (double)((long double)c.sign * expl(c.log_abs));
}

double gml_prefactor_exponent(const GMLParams& p, long k) {
    if (k < 0) throw DomainError("gml_prefactor_exponent: k must be nonnegative");
    const double am1 = p.alpha * (p.m - 1.0);
    return -(double)k * am1 * (double)p.r -
           0.5 * (double)k * ((double)k - 1.0) * am1 * (p.alpha * p.l + p.alpha);
}

ValueReport gml_eval(const QContext& ctx, const GMLParams& p, double x, EvalMode mode) {
    validate_gml_params(ctx, p);
    if (x < p.a) throw DomainError("gml: x must satisfy x >= a");
    if (x == p.a && (p.r == 0 || p.a == 0.0)) return {1.0, {1, 0.0, true}};

    const double base_lo = std::pow(ctx.q, (double)p.r) * p.a;
    const long double llam = log_abs_or_ninf(p.lambda);
    const long double lql = logl((long double)ctx.q);

    // m > 1 with lambda != 0: the quadratic prefactor exponent eventually
    // dominates, so no partial smallness of terms is evidence of
    // convergence. The adaptive convergence test stays disabled.
    const bool structurally_divergent = p.m > 1.0 && p.lambda != 0.0;

    const long k_limit = mode.kind == EvalMode::Kind::fixed ? mode.k : ctx.max_terms - 1;
    long double sum = 1.0L;  // k = 0 term
    long double prev_mag = 1.0L;
    long double last_mag = 0.0L;
    detail::SignedLog run_c;
    int small_in_a_row = 0;
    int growing_in_a_row = 0;
    for (long k = 1; k <= k_limit; ++k) {
        const double jm = (double)(k - 1) * p.m;
        const detail::SignedLog num = detail::log_q_gamma(ctx, p.alpha * (jm + p.l) + 1.0);
        const detail::SignedLog den = detail::log_q_gamma(ctx, p.alpha * (jm + p.l + 1.0) + 1.0);
        run_c.log_abs += num.log_abs - den.log_abs;
        run_c.sign *= num.sign * den.sign;

        const detail::SignedLog lp =
            detail::log_q_factorial_power(ctx, x, base_lo, p.alpha * (double)k * p.m);
        const long double la = (long double)k * llam +
                               (long double)gml_prefactor_exponent(p, k) * lql +
                               run_c.log_abs + lp.log_abs;
        if (mode.kind == EvalMode::Kind::adaptive && la > kLogTermCap) {
            if (structurally_divergent)
                throw Divergence("gml: series terms grow without bound");
            throw NonConvergence("gml: series terms left floating-point range");
        }
        int sign = run_c.sign * lp.sign;
        if (p.lambda < 0.0 && (k & 1)) sign = -sign;
        const long double term = (long double)sign * expl(la);
        const long double mag = fabsl(term);
        last_mag = mag;

        if (mode.kind == EvalMode::Kind::adaptive) {
            if (mag > prev_mag) {
                if (++growing_in_a_row >= 5)
                    throw Divergence("gml: series terms grow without bound");
            } else {
                growing_in_a_row = 0;
            }
            if (!structurally_divergent &&
                mag <= (long double)ctx.tol_abs + (long double)ctx.tol_rel * fabsl(sum)) {
                if (++small_in_a_row == 3) return {(double)sum, {k + 1, (double)mag, true}};
            } else {
                small_in_a_row = 0;
            }
        }
        prev_mag = mag;
        sum += term;
    }
    if (mode.kind == EvalMode::Kind::fixed) {
        const bool settled = last_mag <= (long double)ctx.tol_abs +
                                         (long double)ctx.tol_rel * fabsl(sum);
        return {(double)sum, {k_limit + 1, (double)last_mag, settled}};
    }
    throw NonConvergence("gml: series did not settle within max_terms");
}

} // namespace qfrac
