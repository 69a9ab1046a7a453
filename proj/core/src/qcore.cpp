#include "qfrac/qcore.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qfrac {

namespace detail {

bool near_nonpositive_integer(double x) {
    if (x > 0.5) return false;
    const double r = std::nearbyint(x);
    return r <= 0.0 && std::fabs(x - r) <= 1e-12;
}

// 1 - q^e computed as -expm1(e log q): accurate even when q^e is close
// to 1 (arguments near a pole that passed the 1e-12 gate).
static long double one_minus_qpow(long double log_q, long double e) {
    return -expm1l(e * log_q);
}

SignedLog log_q_gamma(const QContext& ctx, double x) {
    if (near_nonpositive_integer(x))
        throw PoleError("q_gamma: argument " + std::to_string(x) +
                        " is at a nonpositive-integer pole");

    const long double lq = logl((long double)ctx.q);
    // Factors with q^{i+1} and q^{i+x} both below this threshold differ
    // from 1 by less than extended-precision resolution.
    const long double log_tiny = logl(1e-20L);
    // i large enough that both exponents have decayed past the threshold.
    const long double horizon =
        fmaxl(log_tiny / lq, log_tiny / lq - (long double)x) + 2.0L;
    if (!(horizon < 4e6L))
        throw NonConvergence("q_gamma: argument too far in the left half line");

    SignedLog out;
    out.log_abs = (1.0L - (long double)x) * log1pl(-(long double)ctx.q);
    const long long n = (long long)horizon;
    for (long long i = 0; i <= n; ++i) {
        const long double num = one_minus_qpow(lq, (long double)(i + 1));
        const long double den = one_minus_qpow(lq, (long double)i + (long double)x);
        out.log_abs += logl(num) - logl(fabsl(den));
        if (den < 0.0L) out.sign = -out.sign;
    }
    out.terms = (long)(n + 1);
    return out;
}

ValueReport q_gamma_reported(const QContext& ctx, double x) {
    const SignedLog lg = log_q_gamma(ctx, x);
    ValueReport out;
    out.value = (double)lg.sign * (double)expl(lg.log_abs);
    out.trunc.terms_used = lg.terms;
    // Factors past the horizon differ from 1 by < 1e-20 each; the tail
    // bound is geometric with ratio q.
    out.trunc.est_error = std::fabs(out.value) * 1e-20 / (1.0 - ctx.q);
    out.trunc.converged = true;
    return out;
}

long double q_gamma_ratio(const QContext& ctx, double num, double den) {
    const SignedLog a = log_q_gamma(ctx, num);
    const SignedLog b = log_q_gamma(ctx, den);
    return (long double)(a.sign * b.sign) * expl(a.log_abs - b.log_abs);
}

// prod_{i>=0} (1 - u q^i) / (1 - u q^{i+gamma}) for 0 <= u < 1, truncated per
// the context policy. This product stays O(1); only the t^gamma prefactor of
// the factorial power can leave floating-point range.
static long double fractional_qfp_product(const QContext& ctx, long double u, double gamma,
                                          TruncationReport& rep) {
    const long double lq = logl((long double)ctx.q);
    long double p = 1.0L;
    long double qi = 1.0L;                                   // q^i
    long double qig = expl((long double)gamma * lq);    // q^{i+gamma}
    int small_in_a_row = 0;
    for (long i = 0; i < ctx.max_terms; ++i) {
        const long double den = 1.0L - u * qig;
        if (den == 0.0L)
            throw DomainError("q_factorial_power: exponent hits a pole of the product");
        const long double factor = (1.0L - u * qi) / den;
        const double increment = (double)fabsl(p * (factor - 1.0L));
        if (increment <= ctx.tol_abs) {
            if (++small_in_a_row == 3) {
                rep = {i + 1, increment, true};
                return p;
            }
        } else {
            small_in_a_row = 0;
        }
        p *= factor;
        qi *= (long double)ctx.q;
        qig *= (long double)ctx.q;
    }
    throw NonConvergence("q_factorial_power: product did not settle within max_terms");
}

ValueReport q_factorial_power_reported(const QContext& ctx, double t, double s, double gamma) {
    // Integer exponent: the finite product, defined for all real t, s.
    if (gamma >= 0.0 && gamma == std::nearbyint(gamma)) {
        const long n = (long)gamma;
        long double p = 1.0L;
        long double qi = 1.0L;
        for (long i = 0; i < n; ++i) {
            p *= (long double)t - qi * (long double)s;
            qi *= (long double)ctx.q;
        }
        return {(double)p, {n, 0.0, true}};
    }
    if (gamma == std::nearbyint(gamma))
        throw DomainError("q_factorial_power: negative integer exponent is a pole on the grid");

    if (!(t > 0.0))
        throw DomainError("q_factorial_power: fractional exponent requires t > 0");
    if (s < 0.0)
        throw DomainError("q_factorial_power: fractional exponent requires s >= 0");
    if (s == 0.0)
        return {std::pow(t, gamma), {0, 0.0, true}};

    const double u = s / t;
    if (std::fabs(u - 1.0) <= 4.0 * 2.220446049250313e-16) {
        // s = t: the i = 0 numerator factor vanishes, so the product is 0
        // for gamma > 0; for gamma < 0 the true value is unbounded.
        if (gamma > 0.0) return {0.0, {1, 0.0, true}};
        throw DomainError("q_factorial_power: s = t with negative exponent has no finite value");
    }
    if (u > 1.0)
        throw DomainError("q_factorial_power: requires s/t <= 1 for fractional exponents, got " +
                          std::to_string(u));

    // t^gamma prod (1 - u q^i) / (1 - u q^{i+gamma})
    TruncationReport rep;
    const long double p = fractional_qfp_product(ctx, (long double)u, gamma, rep);
    const long double pref = powl((long double)t, (long double)gamma);
    return {(double)(pref * p), rep};
}

SignedLog log_q_factorial_power(const QContext& ctx, double t, double s, double gamma) {
    if (t < 0.0 || s < 0.0 || s > t)
        throw DomainError("log_q_factorial_power: requires 0 <= s <= t");

    if (gamma >= 0.0 && gamma == std::nearbyint(gamma)) {
        // Finite product of nonnegative factors t - q^i s >= t - s.
        const long n = (long)gamma;
        long double acc = 0.0L;
        long double qi = 1.0L;
        for (long i = 0; i < n; ++i) {
            acc += logl((long double)t - qi * (long double)s);
            qi *= (long double)ctx.q;
        }
        return {acc, 1};
    }
    if (gamma == std::nearbyint(gamma))
        throw DomainError("q_factorial_power: negative integer exponent is a pole on the grid");

    if (t == 0.0) {
        if (gamma > 0.0) return {-std::numeric_limits<long double>::infinity(), 1};
        throw DomainError("q_factorial_power: t = 0 with negative exponent has no finite value");
    }
    if (s == 0.0) return {(long double)gamma * logl((long double)t), 1};

    const double u = s / t;
    if (std::fabs(u - 1.0) <= 4.0 * 2.220446049250313e-16) {
        if (gamma > 0.0) return {-std::numeric_limits<long double>::infinity(), 1};
        throw DomainError("q_factorial_power: s = t with negative exponent has no finite value");
    }

    TruncationReport rep;
    const long double p = fractional_qfp_product(ctx, (long double)u, gamma, rep);
    return {(long double)gamma * logl((long double)t) + logl(fabsl(p)),
            p < 0.0L ? -1 : 1};
}

} // namespace detail

double q_bracket(const QContext& ctx, double x) {
    // (1 - q^x)/(1 - q), with expm1 keeping small exponents accurate.
    return -std::expm1(x * std::log(ctx.q)) / (1.0 - ctx.q);
}

ValueReport q_pochhammer(const QContext& ctx, double z, std::optional<long> n) {
    if (n.has_value()) {
        if (*n < 0) throw DomainError("q_pochhammer: finite order must be nonnegative");
        long double p = 1.0L;
        long double qi = 1.0L;
        for (long i = 0; i < *n; ++i) {
            p *= 1.0L - (long double)z * qi;
            qi *= (long double)ctx.q;
        }
        return {(double)p, {*n, 0.0, true}};
    }
    // Infinite product: the i-th factor differs from 1 by |z| q^i.
    long double p = 1.0L;
    long double qi = 1.0L;
    int small_in_a_row = 0;
    for (long i = 0; i < ctx.max_terms; ++i) {
        const double increment = (double)fabsl(p * (long double)z * qi);
        if (increment <= ctx.tol_abs) {
            if (++small_in_a_row == 3)
                return {(double)p, {i + 1, increment, true}};
        } else {
            small_in_a_row = 0;
        }
        p *= 1.0L - (long double)z * qi;
        qi *= (long double)ctx.q;
    }
    throw NonConvergence("q_pochhammer: infinite product did not settle within max_terms");
}

double q_gamma(const QContext& ctx, double x) {
    const detail::SignedLog g = detail::log_q_gamma(ctx, x);
    return (double)((long double)g.sign * expl(g.log_abs));
}

double q_factorial_power(const QContext& ctx, double t, double s, double gamma) {
    return detail::q_factorial_power_reported(ctx, t, s, gamma).value;
}

} // namespace qfrac
