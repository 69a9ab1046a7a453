#pragma once

// First-order q-calculus on the time scale.
//
//   nabla q-derivative   (nabla_q f)(t) = (f(t) - f(qt)) / ((1-q) t),  t > 0
//   Jackson q-integral   int_0^t f = (1-q) t sum_{i>=0} q^i f(t q^i)
//   between limits       int_a^t f = int_0^t f - int_0^a f
//   tail integrals       int_t^inf f = (1-q) t sum_{i>=1} q^{-i} f(t q^{-i})
//                        int_t^b   f = int_t^inf f - int_b^inf f
//
// A lower limit a (or finite upper bound b) that lies on the grid of the
// other endpoint, a = t q^N with integer N detected to 1e-12 in log_q,
// is evaluated as the exact finite sum with no truncation error.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qfrac/context.hpp"

namespace qfrac {

// A real-valued function evaluable at the points a Jackson sum visits
// (t, tq, tq^2, ...). Evaluation below domain_floor is an error, never a
// silent extrapolation. The rule must be deterministic and reentrant.
struct GridFunction {
    std::function<double(double)> eval;
    double domain_floor = 0.0;
    std::string label;

    double operator()(double x) const {
        if (x < domain_floor - 1e-12 * std::max(1.0, std::abs(domain_floor)))
            throw DomainError("GridFunction '" + label + "': evaluation at " +
                              std::to_string(x) + " below domain floor " +
                              std::to_string(domain_floor));
        return eval(x);
    }
};

// Polynomial sum c_k x^k as a GridFunction (defined everywhere).
GridFunction make_polynomial(const std::vector<double>& coeffs, std::string label = "");

// f(x) = (x - a)_q^mu as a GridFunction. Integer mu >= 0 is defined
// everywhere; fractional mu is defined for x >= a (value 0 at x = a).
GridFunction make_q_power(const QContext& ctx, double a, double mu, std::string label = "");

// (f(t) - f(qt)) / ((1-q) t). Throws DomainError for t <= 0.
double nabla_q_derivative(const QContext& ctx, const GridFunction& f, double t);

// n-fold composition of the nabla q-derivative; n = 0 returns f(t).
// Needs f at t, qt, ..., q^n t.
double nabla_q_derivative_iter(const QContext& ctx, const GridFunction& f, double t, long n);

// (1-q) t sum_{i>=0} q^i f(t q^i), truncated per the context policy.
ValueReport q_integral_from_zero(const QContext& ctx, const GridFunction& f, double t);

// int_a^t f for 0 <= a <= t. Grid-compatible a = t q^N uses the exact
// N-term sum; otherwise the difference of two truncated sums from zero.
ValueReport q_integral(const QContext& ctx, const GridFunction& f, double a, double t);

// int_t^b f for b > t, b = nullopt meaning b = infinity.
// The infinite tail needs q^i |f(t q^{-i})| to meet the truncation
// criterion (constant f does not converge); finite grid-compatible b is
// an exact finite sum, and finite off-grid b is a difference of tails.
ValueReport q_integral_tail(const QContext& ctx, const GridFunction& f, double t,
                            std::optional<double> b);

namespace detail {

// Integer N >= 0 with a = t q^N (|log_q(a/t) - N| <= 1e-12), if any.
std::optional<long> grid_steps(double q, double a, double t);

} // namespace detail

} // namespace qfrac
