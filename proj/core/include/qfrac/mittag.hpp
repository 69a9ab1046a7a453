#pragma once

// q-analogues of the Mittag-Leffler function.
//
// Double-index form, for z >= z0 >= 0:
//
//   E_{alpha,beta}(lambda; z, z0) = sum_{k>=0} lambda^k (z - z0)_q^{alpha k} / Gamma_q(alpha k + beta)
//
// Generalized form of order r (nonnegative integer), for x >= a >= 0:
//
//   E^r_{alpha,m,l}(lambda; x, a)
//     = 1 + sum_{k>=1} lambda^k q^{e_k} c_k (x - q^r a)_q^{alpha k m},
//   c_k = prod_{j=0}^{k-1} Gamma_q[alpha(j m + l) + 1] / Gamma_q[alpha(j m + l + 1) + 1],
//   e_k = -k alpha (m-1) r - (k(k-1)/2) alpha (m-1) (alpha l + alpha).
//
// m = 1 makes every e_k vanish and the coefficients telescope, reducing the
// generalized form to the double-index one: E^0_{alpha,1,l}(lambda; x, a)
// equals Gamma_q(alpha l + 1) E_{alpha, alpha l + 1}(lambda; x, a).
//
// For m > 1 with lambda != 0 the q^{e_k} prefactor grows superexponentially
// in k, so the series has no convergent regime at x above the lower point:
// adaptive evaluation reports Divergence on sustained term growth and never
// reports convergence. Fixed-k evaluation returns the partial sum through
// k terms unconditionally, which is the object coefficient-level identities
// are stated for.

#include "qfrac/context.hpp"
#include "qfrac/qcore.hpp"

namespace qfrac {

struct MLDoubleParams {
    double alpha;         // > 0
    double beta;          // alpha k + beta must avoid nonpositive-integer poles
    double lambda;
    double z0 = 0.0;      // >= 0
};

struct GMLParams {
    double alpha;         // > 0
    double m;             // > 0
    double l;             // alpha(j m + l) + 1 and alpha(j m + l + 1) + 1 must avoid poles
    double lambda;
    double a = 0.0;       // >= 0
    long   r = 0;         // >= 0
};

// Throw DomainError / PoleError when the parameter set is outside the
// domain described above. Pole checks cover every Gamma_q argument the
// series can produce (the argument families are affine and increasing in
// the term index, so only finitely many k need inspection).
void validate_ml_params(const QContext& ctx, const MLDoubleParams& p);
void validate_gml_params(const QContext& ctx, const GMLParams& p);

// E_{alpha,beta}(lambda; z, z0), adaptive truncation. Outside the region
// of convergence the terms grow without bound and the evaluation ends in
// NonConvergence (term overflow or max_terms).
ValueReport ml_double_eval(const QContext& ctx, const MLDoubleParams& p, double z);

// c_k as defined above; c_0 = 1. May underflow to 0 in double for large k
// (series evaluation keeps the coefficients in log space internally).
double gml_coefficient(const QContext& ctx, const GMLParams& p, long k);

// e_k as defined above; e_0 = 0. Pure arithmetic in the parameters.
double gml_prefactor_exponent(const GMLParams& p, long k);

// E^r_{alpha,m,l}(lambda; x, a) for x >= a. See the header comment for
// the two evaluation modes; x = a with r = 0 (or a = 0) is exactly 1.
ValueReport gml_eval(const QContext& ctx, const GMLParams& p, double x,
                     EvalMode mode = EvalMode::adaptive());

namespace detail {

// log |c_k| and its sign.
SignedLog log_gml_coefficient(const QContext& ctx, const GMLParams& p, long k);

} // namespace detail

} // namespace qfrac
