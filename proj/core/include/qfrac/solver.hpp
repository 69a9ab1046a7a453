#pragma once

// Caputo-type q-fractional initial value problem
//
//   C_a^alpha y(x) = lambda (x - a)_q^beta y(q^{-beta} x),
//   nabla^r y(a) = b_r,   r = 0, ..., n-1,   n = floor(alpha) + 1,
//
// with alpha > 0 non-integer, beta > -alpha, a >= 0.
//
// Solutions are carried as formal power chains in the q-factorial powers
// (x - a)_q^mu. The successive approximation
//
//   y_m(x) = y_0(x) + lambda I_a^alpha [ (x - a)_q^beta y_{m-1}(q^{-beta} x) ](x),
//   y_0(x) = sum_r b_r / Gamma_q(r+1) (x - a)_q^r,
//
// maps a term A (x-a)_q^mu to
//
//   lambda q^{-beta mu} Gamma_q(beta+mu+1) / Gamma_q(alpha+beta+mu+1) A (x-a)_q^{mu+alpha+beta},
//
// so the limit splits into one chain per initial order r with powers
// r + k(alpha+beta). Chain r equals b_r / Gamma_q(r+1) (x-a)_q^r times a
// generalized Mittag-Leffler-type series with coefficients c_k taken at
// l = (beta+r)/alpha and prefactor exponents
//
//   e_{r,k} = -k beta r - (k(k-1)/2) beta (alpha + beta),
//
// which is exactly what the iteration produces (the per-step exponent
// increments are -beta (r + k(alpha+beta))).
//
// For beta > 0 the coefficients grow superexponentially and the chains
// have no pointwise sum at x > a; they remain verifiable term by term
// through coefficient_residual, and adaptive evaluation reports
// Divergence.

#include <vector>

#include "qfrac/context.hpp"

namespace qfrac {

struct IVPSpec {
    double alpha;            // > 0, bounded away from integers by 1e-12
    double beta;             // > -alpha
    double a;                // >= 0
    double lambda;
    std::vector<double> b;   // b[r] = nabla^r y(a), size floor(alpha)+1

    IVPSpec(double alpha_, double beta_, double a_, double lambda_, std::vector<double> b_);

    long n() const;          // number of initial conditions
};

// Finite list of terms A_k (x - q^shift a)_q^{mu_k} behind a common front
// factor (x - a)_q^offset, with mu strictly increasing. The coefficients
// live in extended precision because divergent-regime chains overflow
// double quickly. A series is tied to the q of the context that built it.
struct FormalQSeries {
    struct Term {
        double mu;
        long double coeff;
    };

    double a = 0.0;
    long shift = 0;          // term base is x - q^shift a
    double offset = 0.0;     // front factor (x - a)_q^offset
    std::vector<Term> terms;
};

// y_m after the given number of iterations, merged across chains
// (shift = 0, offset = 0). Terms whose coefficient magnitude would pass
// e^11000 are dropped rather than overflowed.
FormalQSeries successive_approximation(const QContext& ctx, const IVPSpec& spec, long iterations);

// Chain r, for r = 0, ..., n-1: front factor (x - a)_q^r (offset = r),
// term base x - q^r a (shift = r), powers mu_k = k(alpha+beta), and
// coefficients b_r / Gamma_q(r+1) lambda^k q^{e_{r,k}} c_k through k_max
// (fewer when the overflow guard stops a divergent chain).
std::vector<FormalQSeries> closed_form_components(const QContext& ctx, const IVPSpec& spec,
                                                  long k_max);

// The components merged into one series in powers of (x - a)_q alone:
// chain r contributes powers r + k(alpha+beta) with unchanged
// coefficients. Power collisions across chains (within 1e-9 absolute
// plus relative slack) are coalesced by adding coefficients.
FormalQSeries closed_form_series(const QContext& ctx, const IVPSpec& spec, long k_max);

// Value of the series at x >= a. Adaptive mode applies the truncation
// policy, reports Divergence on sustained term growth, and reports
// NonConvergence when the stored terms run out first; fixed mode sums
// the first min(k+1, stored) terms unconditionally, with est_error the
// magnitude of the last included term.
ValueReport evaluate_series(const QContext& ctx, const FormalQSeries& series, double x,
                            EvalMode mode = EvalMode::adaptive());

// Max over k >= 1 of the relative defect of the coefficient recurrence
//   A_k Gamma_q(e_k+1)/Gamma_q(e_k-alpha+1) = lambda q^{-beta e_{k-1}} A_{k-1},
//   e_k = offset + mu_k,
// which a single chain of the equation satisfies identically. The series
// must be one chain (powers stepping by alpha+beta); anything else is a
// DomainError. lambda = 0 gives 0.
double coefficient_residual(const QContext& ctx, const IVPSpec& spec,
                            const FormalQSeries& series);

// | C_a^alpha y(x) - lambda (x-a)_q^beta y(q^{-beta} x) | with y the
// adaptive evaluation of the series. The Caputo side is full quadrature,
// independent of how the series was built. x must satisfy the grid
// requirement of the fractional integral.
double numeric_residual(const QContext& ctx, const IVPSpec& spec, const FormalQSeries& series,
                        double x);

} // namespace qfrac
