#include "qfrac/qcalc.hpp"

#include <cmath>
#include <limits>

#include "qfrac/qcore.hpp"

namespace qfrac {

namespace detail {

std::optional<long> grid_steps(double q, double a, double t) {
    if (!(a > 0.0) || !(t > 0.0)) return std::nullopt;
    const double r = std::log(a / t) / std::log(q);
    const double n = std::nearbyint(r);
    if (std::fabs(r - n) <= 1e-12 && n >= 0.0) return (long)n;
    return std::nullopt;
}

} // namespace detail

GridFunction make_polynomial(const std::vector<double>& coeffs, std::string label) {
    GridFunction g;
    g.domain_floor = -std::numeric_limits<double>::infinity();
    g.label = label.empty() ? "polynomial" : std::move(label);
    g.eval = [coeffs](double x) {
        double acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    return g;
}

GridFunction make_q_power(const QContext& ctx, double a, double mu, std::string label) {
    if (mu < 0.0 && mu == std::nearbyint(mu))
        throw DomainError("make_q_power: negative integer exponent is a pole on the grid");
    const bool whole = mu >= 0.0 && mu == std::nearbyint(mu);
    if (!whole && a < 0.0)
        throw DomainError("make_q_power: fractional exponent requires a >= 0");

    GridFunction g;
    g.domain_floor = whole ? -std::numeric_limits<double>::infinity() : a;
    g.label = label.empty() ? "q_power" : std::move(label);
    g.eval = [ctx, a, mu](double x) {
        if (x == 0.0 && a == 0.0) {
            if (mu > 0.0) return 0.0;
            if (mu == 0.0) return 1.0;
            throw DomainError("q_power: x = 0 with negative exponent");
        }
        return q_factorial_power(ctx, x, a, mu);
    };
    return g;
}

double nabla_q_derivative(const QContext& ctx, const GridFunction& f, double t) {
    if (!(t > 0.0))
        throw DomainError("nabla_q_derivative: requires t > 0, got " + std::to_string(t));
    return (f(t) - f(ctx.q * t)) / ((1.0 - ctx.q) * t);
}

double nabla_q_derivative_iter(const QContext& ctx, const GridFunction& f, double t, long n) {
    if (n < 0) throw DomainError("nabla_q_derivative_iter: order must be nonnegative");
    if (n == 0) return f(t);
    if (!(t > 0.0))
        throw DomainError("nabla_q_derivative_iter: requires t > 0, got " + std::to_string(t));
    const double hi = nabla_q_derivative_iter(ctx, f, t, n - 1);
    const double lo = nabla_q_derivative_iter(ctx, f, ctx.q * t, n - 1);
    return (hi - lo) / ((1.0 - ctx.q) * t);
}

ValueReport q_integral_from_zero(const QContext& ctx, const GridFunction& f, double t) {
    if (t < 0.0)
        throw DomainError("q_integral_from_zero: upper limit must be nonnegative");
    if (t == 0.0) return {0.0, {0, 0.0, true}};

    const long double c = (1.0L - (long double)ctx.q) * (long double)t;
    long double sum = 0.0L;
    long double qi = 1.0L;
    int small_in_a_row = 0;
    for (long i = 0; i < ctx.max_terms; ++i) {
        const long double term = c * qi * (long double)f(t * (double)qi);
        const double inc = (double)fabsl(term);
        if (inc <= ctx.tol_abs + ctx.tol_rel * (double)fabsl(sum)) {
            if (++small_in_a_row == 3)
                return {(double)sum, {i + 1, inc, true}};
        } else {
            small_in_a_row = 0;
        }
        sum += term;
        qi *= (long double)ctx.q;
    }
    throw NonConvergence("q_integral_from_zero: Jackson sum did not settle within max_terms");
}

ValueReport q_integral(const QContext& ctx, const GridFunction& f, double a, double t) {
    if (a < 0.0)
        throw DomainError("q_integral: lower limit must be nonnegative");
    if (a > t)
        throw DomainError("q_integral: lower limit exceeds upper limit");
    if (a == t) return {0.0, {0, 0.0, true}};
    if (a == 0.0) return q_integral_from_zero(ctx, f, t);

    if (const auto steps = detail::grid_steps(ctx.q, a, t)) {
        // a = t q^N: the two Jackson sums telescope to N leading terms.
        const long n = *steps;
        const long double c = (1.0L - (long double)ctx.q) * (long double)t;
        long double sum = 0.0L;
        long double qi = 1.0L;
        for (long i = 0; i < n; ++i) {
            sum += c * qi * (long double)f(t * (double)qi);
            qi *= (long double)ctx.q;
        }
        return {(double)sum, {n, 0.0, true}};
    }

    const ValueReport top = q_integral_from_zero(ctx, f, t);
    const ValueReport bot = q_integral_from_zero(ctx, f, a);
    return {top.value - bot.value,
            {top.trunc.terms_used + bot.trunc.terms_used,
             top.trunc.est_error + bot.trunc.est_error,
             top.trunc.converged && bot.trunc.converged}};
}

ValueReport q_integral_tail(const QContext& ctx, const GridFunction& f, double t,
                            std::optional<double> b) {
    if (!(t > 0.0))
        throw DomainError("q_integral_tail: requires t > 0, got " + std::to_string(t));

    if (!b.has_value()) {
        // (1-q) t sum_{i>=1} q^{-i} f(t q^{-i}); the summand must decay
        // for the truncation policy to trigger (f = const does not).
        const long double c = (1.0L - (long double)ctx.q) * (long double)t;
        long double sum = 0.0L;
        long double qmi = 1.0L;
        int small_in_a_row = 0;
        for (long i = 1; i <= ctx.max_terms; ++i) {
            qmi /= (long double)ctx.q;
            const long double term = c * qmi * (long double)f(t * (double)qmi);
            const double inc = (double)fabsl(term);
            if (inc <= ctx.tol_abs + ctx.tol_rel * (double)fabsl(sum)) {
                if (++small_in_a_row == 3)
                    return {(double)sum, {i, inc, true}};
            } else {
                small_in_a_row = 0;
            }
            sum += term;
        }
        throw NonConvergence("q_integral_tail: tail sum did not settle within max_terms");
    }

    if (*b < t)
        throw DomainError("q_integral_tail: upper limit below lower limit");
    if (*b == t) return {0.0, {0, 0.0, true}};

    if (const auto steps = detail::grid_steps(ctx.q, t, *b)) {
        // t = b q^N: the two tails telescope to the N nearest terms.
        const long n = *steps;
        const long double c = (1.0L - (long double)ctx.q) * (long double)t;
        long double sum = 0.0L;
        long double qmi = 1.0L;
        for (long i = 1; i <= n; ++i) {
            qmi /= (long double)ctx.q;
            sum += c * qmi * (long double)f(t * (double)qmi);
        }
        return {(double)sum, {n, 0.0, true}};
    }

    const ValueReport from_t = q_integral_tail(ctx, f, t, std::nullopt);
    const ValueReport from_b = q_integral_tail(ctx, f, *b, std::nullopt);
    return {from_t.value - from_b.value,
            {from_t.trunc.terms_used + from_b.trunc.terms_used,
             from_t.trunc.est_error + from_b.trunc.est_error,
             from_t.trunc.converged && from_b.trunc.converged}};
}

} // namespace qfrac
