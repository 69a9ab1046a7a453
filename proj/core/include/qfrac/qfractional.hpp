#pragma once

// Fractional q-integral of Riemann type and the Caputo q-derivative.
//
//   ( I_a^alpha f )(t) = (1/Gamma_q(alpha)) int_a^t (t - q s)_q^{alpha-1} f(s) nabla s
//   ( C_a^alpha f )(t) = ( I_a^{n-alpha} nabla^n f )(t),   n = floor(alpha) + 1
//
// For integer alpha the Caputo derivative is the plain n-fold nabla
// derivative, computed directly (no quadrature, bit-identical to
// nabla_q_derivative_iter). Positive lower limits must lie on the q-grid
// of the evaluation point, a = t q^N.
//
// Closed forms for powers (x - a)_q^mu:
//   I_a^alpha : coefficient Gamma_q(mu+1) / Gamma_q(mu+alpha+1), power mu+alpha
//   C_a^alpha : coefficient Gamma_q(mu+1) / Gamma_q(mu-alpha+1), power mu-alpha
//
// The Taylor-remainder identity for f defined in suitable domains,
//   ( I_a^alpha C_a^alpha f )(t) = f(t) - sum_{k<n} (t-a)_q^k / Gamma_q(k+1) * (nabla^k f)(a),
// collapses to f(t) - f(a) when 0 < alpha <= 1.

#include <vector>

#include "qfrac/context.hpp"
#include "qfrac/qcalc.hpp"

namespace qfrac {

// ( I_a^alpha f )(t). Requires alpha > 0, 0 <= a <= t, and a on the
// q-grid of t when a > 0. a = t gives 0.
ValueReport riemann_q_integral_frac(const QContext& ctx, const GridFunction& f, double a,
                                    double alpha, double t);

// Gamma_q(mu+1) / Gamma_q(mu+alpha+1): the coefficient in
// I_a^alpha (x-a)_q^mu = coeff * (x-a)_q^{mu+alpha}. Requires alpha > 0
// and mu > -1.
double power_rule_closed_form(const QContext& ctx, double alpha, double mu);

// ( C_a^alpha f )(t). Integer alpha >= 0 is the exact n-fold nabla
// derivative; fractional alpha needs f evaluable down to a q^n (the
// inner derivative looks n grid steps below each quadrature node).
ValueReport caputo_q_derivative(const QContext& ctx, const GridFunction& f, double a,
                                double alpha, double t);

// Gamma_q(mu+1) / Gamma_q(mu-alpha+1): the coefficient in
// C_a^alpha (x-a)_q^mu = coeff * (x-a)_q^{mu-alpha}. Requires
// 0 < alpha < 1, mu > 0, and mu - alpha > -1.
double caputo_power_closed_form(const QContext& ctx, double alpha, double mu);

// Max over the given points of the Taylor-remainder defect
//   | ( I_a^alpha C_a^alpha f )(t) - f(t) + sum_{k<n} (t-a)_q^k / Gamma_q(k+1) (nabla^k f)(a) |.
// Every point must satisfy the grid requirement of riemann_q_integral_frac.
double check_taylor_identity(const QContext& ctx, const GridFunction& f, double a, double alpha,
                             const std::vector<double>& points);

// Deliberately wrong variant of caputo_q_derivative with the classical
// Gamma in place of Gamma_q in the 1/Gamma(n-alpha) prefactor. Exists so
// diagnostics can show the identity above failing; never use it for
// computation.
ValueReport caputo_q_derivative_classical_gamma(const QContext& ctx, const GridFunction& f,
                                                double a, double alpha, double t);

} // namespace qfrac
