#include "qfrac/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qfrac/qcalc.hpp"
#include "qfrac/qcore.hpp"
#include "qfrac/qfractional.hpp"

namespace qfrac {

namespace {

// Coefficients beyond this log magnitude stop a chain instead of
// overflowing extended precision.
constexpr long double kLogCoeffCap = 11000.0L;

constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();

long double log_abs_or_ninf(long double v) { return v == 0.0L ? kNegInf : logl(fabsl(v)); }

bool same_power(double mu1, double mu2) {
    return std::fabs(mu1 - mu2) <= 1e-9 * (1.0 + std::fabs(mu1));
}

void sort_and_coalesce(std::vector<FormalQSeries::Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const FormalQSeries::Term& x, const FormalQSeries::Term& y) { return x.mu < y.mu; });
    std::vector<FormalQSeries::Term> out;
    for (const auto& t : terms) {
        if (!out.empty() && same_power(out.back().mu, t.mu))
            out.back().coeff += t.coeff;
        else
            out.push_back(t);
    }
    terms = std::move(out);
}

std::vector<FormalQSeries::Term> seed_terms(const QContext& ctx, const IVPSpec& spec) {
    std::vector<FormalQSeries::Term> ts;
    for (long r = 0; r < spec.n(); ++r)
        ts.push_back({(double)r,
                      (long double)spec.b[(size_t)r] / (long double)q_gamma(ctx, (double)r + 1.0)});
    return ts;
}

} // namespace

IVPSpec::IVPSpec(double alpha_, double beta_, double a_, double lambda_, std::vector<double> b_)
    : alpha(alpha_), beta(beta_), a(a_), lambda(lambda_), b(std::move(b_)) {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(a) ||
        !std::isfinite(lambda))
        throw DomainError("IVPSpec: parameters must be finite");
    if (!(alpha > 0.0)) throw DomainError("IVPSpec: alpha must be positive");
    if (std::fabs(alpha - std::nearbyint(alpha)) <= 1e-12)
        throw DomainError("IVPSpec: alpha must be bounded away from the integers");
    if (!(beta > -alpha)) throw DomainError("IVPSpec: beta must exceed -alpha");
    if (a < 0.0) throw DomainError("IVPSpec: a must be nonnegative");
    if ((long)b.size() != n())
        throw DomainError("IVPSpec: expected " + std::to_string(n()) +
                          " initial values, got " + std::to_string(b.size()));
}

long IVPSpec::n() const { return (long)std::floor(alpha) + 1; }

FormalQSeries successive_approximation(const QContext& ctx, const IVPSpec& spec,
                                       long iterations) {
    if (iterations < 0)
        throw DomainError("successive_approximation: iterations must be nonnegative");
    const long double lql = logl((long double)ctx.q);
    const long double llam = log_abs_or_ninf((long double)spec.lambda);

    FormalQSeries y;
    y.a = spec.a;
    y.terms = seed_terms(ctx, spec);
    for (long it = 0; it < iterations; ++it) {
        std::vector<FormalQSeries::Term> next = seed_terms(ctx, spec);
        for (const auto& t : y.terms) {
            const detail::SignedLog num = detail::log_q_gamma(ctx, spec.beta + t.mu + 1.0);
            const detail::SignedLog den =
                detail::log_q_gamma(ctx, spec.alpha + spec.beta + t.mu + 1.0);
            const long double log_coeff = llam -
                                          (long double)spec.beta * (long double)t.mu * lql +
                                          num.log_abs - den.log_abs +
                                          log_abs_or_ninf(t.coeff);
            if (log_coeff > kLogCoeffCap) continue;
            int sign = num.sign * den.sign * (t.coeff < 0.0L ? -1 : 1);
            if (spec.lambda < 0.0) sign = -sign;
            next.push_back({t.mu + spec.alpha + spec.beta,
                            (long double)sign * expl(log_coeff)});
        }
        sort_and_coalesce(next);
        y.terms = std::move(next);
    }
    return y;
}

std::vector<FormalQSeries> closed_form_components(const QContext& ctx, const IVPSpec& spec,
                                                  long k_max) {
    if (k_max < 0) throw DomainError("closed_form_components: k_max must be nonnegative");
    const long double lql = logl((long double)ctx.q);
    const long double llam = log_abs_or_ninf((long double)spec.lambda);
    const long double step_l = (long double)spec.alpha + (long double)spec.beta;

    std::vector<FormalQSeries> out;
    for (long r = 0; r < spec.n(); ++r) {
        FormalQSeries s;
        s.a = spec.a;
        s.shift = r;
        s.offset = (double)r;
        const long double scale =
            (long double)spec.b[(size_t)r] / (long double)q_gamma(ctx, (double)r + 1.0);
        s.terms.push_back({0.0, scale});

        const long double lscale = log_abs_or_ninf(scale);
        const int scale_sign = scale < 0.0L ? -1 : 1;
        long double log_c = 0.0L;
        int c_sign = 1;
        for (long k = 1; k <= k_max; ++k) {
            const double arg =
                (double)(k - 1) * (spec.alpha + spec.beta) + spec.beta + (double)r + 1.0;
            const detail::SignedLog num = detail::log_q_gamma(ctx, arg);
            const detail::SignedLog den = detail::log_q_gamma(ctx, arg + spec.alpha);
            log_c += num.log_abs - den.log_abs;
            c_sign *= num.sign * den.sign;

            const long double kl = (long double)k;
            const long double e_rk = -kl * (long double)spec.beta * (long double)r -
                                     0.5L * kl * (kl - 1.0L) * (long double)spec.beta * step_l;
            const long double log_A = lscale + kl * llam + e_rk * lql + log_c;
            if (log_A > kLogCoeffCap) break;
            int sign = scale_sign * c_sign;
            if (spec.lambda < 0.0 && (k & 1)) sign = -sign;
            s.terms.push_back({(double)k * (spec.alpha + spec.beta),
                               (long double)sign * expl(log_A)});
        }
        out.push_back(std::move(s));
    }
    return out;
}

FormalQSeries closed_form_series(const QContext& ctx, const IVPSpec& spec, long k_max) {
    FormalQSeries merged;
    merged.a = spec.a;
    merged.shift = 0;
    merged.offset = 0.0;
    for (const auto& comp : closed_form_components(ctx, spec, k_max))
        for (const auto& t : comp.terms)
            merged.terms.push_back({comp.offset + t.mu, t.coeff});
    sort_and_coalesce(merged.terms);
    return merged;
}

ValueReport evaluate_series(const QContext& ctx, const FormalQSeries& series, double x,
                            EvalMode mode) {
    if (x < series.a)
        throw DomainError("evaluate_series: x must satisfy x >= a");
    const detail::SignedLog front =
        detail::log_q_factorial_power(ctx, x, series.a, series.offset);
    const double base = std::pow(ctx.q, (double)series.shift) * series.a;
    const long stored = (long)series.terms.size();
    const long limit =
        mode.kind == EvalMode::Kind::fixed ? std::min(mode.k + 1, stored) : stored;

    long double sum = 0.0L;
    long double prev_mag = std::numeric_limits<long double>::infinity();
    long double last_mag = 0.0L;
    int small_in_a_row = 0;
    int growing_in_a_row = 0;
    for (long i = 0; i < limit; ++i) {
        const auto& t = series.terms[(size_t)i];
        const detail::SignedLog lp = detail::log_q_factorial_power(ctx, x, base, t.mu);
        const long double la = front.log_abs + lp.log_abs + log_abs_or_ninf(t.coeff);
        if (mode.kind == EvalMode::Kind::adaptive && la > kLogCoeffCap)
            throw Divergence("evaluate_series: series terms grow without bound");
        const int sign = front.sign * lp.sign * (t.coeff < 0.0L ? -1 : 1);
        const long double term = (long double)sign * expl(la);
        const long double mag = fabsl(term);
        last_mag = mag;

        if (mode.kind == EvalMode::Kind::adaptive) {
            if (mag > prev_mag) {
                if (++growing_in_a_row >= 5)
                    throw Divergence("evaluate_series: series terms grow without bound");
            } else {
                growing_in_a_row = 0;
            }
            prev_mag = mag;
            if (mag <= (long double)ctx.tol_abs + (long double)ctx.tol_rel * fabsl(sum)) {
                if (++small_in_a_row == 3) return {(double)sum, {i + 1, (double)mag, true}};
            } else {
                small_in_a_row = 0;
            }
        }
        sum += term;
    }
    if (mode.kind == EvalMode::Kind::fixed) {
        const bool settled = last_mag <= (long double)ctx.tol_abs +
                                         (long double)ctx.tol_rel * fabsl(sum);
        return {(double)sum, {limit, (double)last_mag, settled}};
    }
    throw NonConvergence("evaluate_series: stored terms exhausted before the truncation criterion");
}

double coefficient_residual(const QContext& ctx, const IVPSpec& spec,
                            const FormalQSeries& series) {
    if (spec.lambda == 0.0 || series.terms.size() < 2) return 0.0;
    const double step = spec.alpha + spec.beta;
    for (size_t k = 0; k < series.terms.size(); ++k) {
        const double expect = series.terms[0].mu + (double)k * step;
        if (std::fabs(series.terms[k].mu - expect) > 1e-9 * (1.0 + std::fabs(expect)))
            throw DomainError("coefficient_residual: series is not a single chain of the equation");
    }

    const long double lql = logl((long double)ctx.q);
    long double worst = 0.0L;
    for (size_t k = 1; k < series.terms.size(); ++k) {
        const double e_k = series.offset + series.terms[k].mu;
        const double e_km1 = series.offset + series.terms[k - 1].mu;
        const long double ratio = detail::q_gamma_ratio(ctx, e_k + 1.0, e_k - spec.alpha + 1.0);
        const long double lhs = series.terms[k].coeff * ratio;
        const long double rhs =
            (long double)spec.lambda *
            expl(-(long double)spec.beta * (long double)e_km1 * lql) *
            series.terms[k - 1].coeff;
        if (lhs == 0.0L && rhs == 0.0L) continue;
        worst = std::max(worst, fabsl(lhs - rhs) / fabsl(lhs));
    }
    return (double)worst;
}

double numeric_residual(const QContext& ctx, const IVPSpec& spec, const FormalQSeries& series,
                        double x) {
    if (series.a != spec.a)
        throw DomainError("numeric_residual: series expansion point differs from the lower limit");

    GridFunction y;
    y.domain_floor = series.a;
    y.label = "formal_series";
    y.eval = [&ctx, &series](double s) { return evaluate_series(ctx, series, s).value; };

    const double lhs = caputo_q_derivative(ctx, y, spec.a, spec.alpha, x).value;
    const double shifted = std::pow(ctx.q, -spec.beta) * x;
    const double rhs = spec.lambda * q_factorial_power(ctx, x, spec.a, spec.beta) *
                       evaluate_series(ctx, series, shifted).value;
    return std::fabs(lhs - rhs);
}

} // namespace qfrac
