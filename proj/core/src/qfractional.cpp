#include "qfrac/qfractional.hpp"

#include <cmath>

#include "qfrac/qcore.hpp"

namespace qfrac {

ValueReport riemann_q_integral_frac(const QContext& ctx, const GridFunction& f, double a,
                                    double alpha, double t) {
    if (!(alpha > 0.0))
        throw DomainError("riemann_q_integral_frac: order must be positive");
    if (a < 0.0)
        throw DomainError("riemann_q_integral_frac: lower limit must be nonnegative");
    if (a > t)
        throw DomainError("riemann_q_integral_frac: lower limit exceeds evaluation point");
    if (a == t) return {0.0, {0, 0.0, true}};
    if (a > 0.0 && !detail::grid_steps(ctx.q, a, t))
        throw DomainError("riemann_q_integral_frac: lower limit must lie on the q-grid of t");

    // Quadrature nodes are s = t q^i, so the kernel argument q s / t = q^{i+1}
    // stays inside the fractional-power domain for every node.
    GridFunction g;
    g.domain_floor = f.domain_floor;
    g.label = "frac_kernel(" + f.label + ")";
    g.eval = [&ctx, &f, alpha, t](double s) {
        return q_factorial_power(ctx, t, ctx.q * s, alpha - 1.0) * f(s);
    };

    const ValueReport r = q_integral(ctx, g, a, t);
    const double gam = q_gamma(ctx, alpha);
    return {r.value / gam, {r.trunc.terms_used, r.trunc.est_error / gam, r.trunc.converged}};
}

double power_rule_closed_form(const QContext& ctx, double alpha, double mu) {
    if (!(alpha > 0.0))
        throw DomainError("power_rule_closed_form: order must be positive");
    if (!(mu > -1.0))
        throw DomainError("power_rule_closed_form: exponent must exceed -1");
    return (double)detail::q_gamma_ratio(ctx, mu + 1.0, mu + alpha + 1.0);
}

ValueReport caputo_q_derivative(const QContext& ctx, const GridFunction& f, double a,
                                double alpha, double t) {
    if (alpha < 0.0)
        throw DomainError("caputo_q_derivative: order must be nonnegative");
    if (alpha == std::nearbyint(alpha))
        return {nabla_q_derivative_iter(ctx, f, t, (long)alpha), {0, 0.0, true}};

    const long n = (long)std::floor(alpha) + 1;
    GridFunction h;
    h.domain_floor = f.domain_floor / std::pow(ctx.q, (double)n);
    h.label = "nabla^" + std::to_string(n) + "(" + f.label + ")";
    h.eval = [&ctx, &f, n](double s) { return nabla_q_derivative_iter(ctx, f, s, n); };
    return riemann_q_integral_frac(ctx, h, a, (double)n - alpha, t);
}

double caputo_power_closed_form(const QContext& ctx, double alpha, double mu) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw DomainError("caputo_power_closed_form: order must lie in (0, 1)");
    if (!(mu > 0.0))
        throw DomainError("caputo_power_closed_form: exponent must be positive");
    if (!(mu - alpha > -1.0))
        throw DomainError("caputo_power_closed_form: exponent must exceed order - 1");
    return (double)detail::q_gamma_ratio(ctx, mu + 1.0, mu - alpha + 1.0);
}

double check_taylor_identity(const QContext& ctx, const GridFunction& f, double a, double alpha,
                             const std::vector<double>& points) {
    if (!(alpha > 0.0))
        throw DomainError("check_taylor_identity: order must be positive");
    const long n = alpha == std::nearbyint(alpha) ? (long)alpha : (long)std::floor(alpha) + 1;

    GridFunction cf;
    cf.domain_floor = a;
    cf.label = "caputo(" + f.label + ")";
    cf.eval = [&ctx, &f, a, alpha](double s) {
        return caputo_q_derivative(ctx, f, a, alpha, s).value;
    };

    double worst = 0.0;
    for (const double t : points) {
        const double lhs = riemann_q_integral_frac(ctx, cf, a, alpha, t).value;
        double rhs = f(t);
        for (long k = 0; k < n; ++k) {
            const double weight = q_factorial_power(ctx, t, a, (double)k) /
                                  q_gamma(ctx, (double)k + 1.0);
            rhs -= weight * nabla_q_derivative_iter(ctx, f, a, k);
        }
        worst = std::max(worst, std::fabs(lhs - rhs));
    }
    return worst;
}

ValueReport caputo_q_derivative_classical_gamma(const QContext& ctx, const GridFunction& f,
                                                double a, double alpha, double t) {
    ValueReport r = caputo_q_derivative(ctx, f, a, alpha, t);
    if (alpha == std::nearbyint(alpha)) return r;
    const long n = (long)std::floor(alpha) + 1;
    const double w = q_gamma(ctx, (double)n - alpha) / std::tgamma((double)n - alpha);
    r.value *= w;
    r.trunc.est_error *= std::fabs(w);
    return r;
}

} // namespace qfrac
