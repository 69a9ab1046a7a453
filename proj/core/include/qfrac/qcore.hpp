#pragma once

// Scalar q-arithmetic primitives.
//
//   q-bracket          [x]_q = (1 - q^x) / (1 - q)
//   q-Pochhammer       (z; q)_n = prod_{i=0}^{n-1} (1 - z q^i),  n finite or infinite
//   q-Gamma            Gamma_q(x) = (1-q)^{1-x} prod_{i>=0} (1 - q^{i+1}) / (1 - q^{i+x})
//   q-factorial power  (t-s)_q^gamma
//       gamma in N:    prod_{i=0}^{gamma-1} (t - q^i s)
//       otherwise:     t^gamma prod_{i>=0} (1 - (s/t) q^i) / (1 - (s/t) q^{i+gamma}),
//                      requires t > 0 and 0 <= s/t <= 1 (strictly < 1 for gamma < 0)
//
// Gamma_q satisfies Gamma_q(x+1) = [x]_q Gamma_q(x), Gamma_q(1) = 1, with poles
// at the nonpositive integers (detected within 1e-12). Negative non-integer
// arguments are supported (the value may be negative; signs are tracked).
//
// All functions are pure; QContext is never mutated.

#include <optional>

#include "qfrac/context.hpp"

namespace qfrac {

// [x]_q. Total function of x.
double q_bracket(const QContext& ctx, double x);

// (z; q)_n. n = nullopt means the infinite product, which requires the
// factors to approach 1 fast enough for the truncation policy; |z| < 1
// guarantees that. Throws NonConvergence if max_terms is exhausted first.
ValueReport q_pochhammer(const QContext& ctx, double z, std::optional<long> n);

// Gamma_q(x). Throws PoleError when x is within 1e-12 of {0, -1, -2, ...}.
double q_gamma(const QContext& ctx, double x);

// (t-s)_q^gamma. Finite product for integer gamma >= 0 (any real t, s);
// infinite-product form otherwise. For the infinite form:
//   - t > 0 and s >= 0 required;
//   - s/t > 1 is outside the domain (DomainError);
//   - s = t yields 0 for gamma > 0 and has no finite value for gamma < 0;
//   - negative integer gamma is a pole on the grid (DomainError).
// Throws NonConvergence if the product truncation fails.
double q_factorial_power(const QContext& ctx, double t, double s, double gamma);

namespace detail {

// log |Gamma_q(x)| and its sign, in extended precision. Same domain and
// pole detection as q_gamma. Used wherever Gamma_q ratios at large
// arguments must stay in range.
struct SignedLog {
    long double log_abs = 0.0L;
    int sign = 1;
    long terms = 0;       // factors examined where the producer counts them
};
SignedLog log_q_gamma(const QContext& ctx, double x);

// q_gamma with its truncation report. The product horizon is fixed by
// the factor threshold, not the context tolerance, so est_error is the
// relative tail bound scaled by the value.
ValueReport q_gamma_reported(const QContext& ctx, double x);

// Ratio Gamma_q(num) / Gamma_q(den) evaluated in log space.
long double q_gamma_ratio(const QContext& ctx, double num, double den);

// q_factorial_power with its truncation report (the public function
// discards the report).
ValueReport q_factorial_power_reported(const QContext& ctx, double t, double s, double gamma);

// log (t-s)_q^gamma for 0 <= s <= t, sign tracked (the non-prefactor
// product can be negative for gamma < 0). Value may be -inf when the
// power is exactly 0. Series assembled from many factorial powers use
// this to stay in range when t^gamma alone would overflow.
SignedLog log_q_factorial_power(const QContext& ctx, double t, double s, double gamma);

// True when x is within 1e-12 of a nonpositive integer.
bool near_nonpositive_integer(double x);

} // namespace detail

} // namespace qfrac
