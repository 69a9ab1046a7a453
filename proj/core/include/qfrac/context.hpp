#pragma once

// Evaluation context and truncation reporting.
//
// QContext carries the base q of the time scale T_q = {q^n : n in Z} u {0}
// together with the global truncation policy. Grid points are always
// generated from q on demand, never stored.
//
// Truncation policy (uniform across all adaptive sums and products):
// stop once the increment magnitude satisfies
//     |increment| <= tol_abs + tol_rel * |running value|
// for three consecutive terms; the third such term is not added and its
// magnitude is reported as est_error. The three-in-a-row rule guards
// against stopping at an accidentally tiny term of a non-monotone tail.

#include <string>

#include "qfrac/errors.hpp"

namespace qfrac {

struct QContext {
    double q;                   // base, 0 < q < 1 strictly
    double tol_abs = 1e-14;     // absolute truncation tolerance, > 0
    double tol_rel = 1e-12;     // relative truncation tolerance, >= 0
    long   max_terms = 10000;   // cap on series/product terms, >= 1

    explicit QContext(double q_, double tol_abs_ = 1e-14, double tol_rel_ = 1e-12,
                      long max_terms_ = 10000)
        : q(q_), tol_abs(tol_abs_), tol_rel(tol_rel_), max_terms(max_terms_) {
        if (!(q > 0.0) || !(q < 1.0))
            throw DomainError("QContext: q must satisfy 0 < q < 1, got " + std::to_string(q_));
        if (!(tol_abs > 0.0))
            throw DomainError("QContext: tol_abs must be positive");
        if (!(tol_rel >= 0.0))
            throw DomainError("QContext: tol_rel must be nonnegative");
        if (max_terms < 1)
            throw DomainError("QContext: max_terms must be at least 1");
    }

    // Context with the same tolerance policy but a different base.
    QContext with_q(double q_) const { return QContext(q_, tol_abs, tol_rel, max_terms); }
};

struct TruncationReport {
    long   terms_used = 0;    // terms/factors consumed, <= max_terms
    double est_error = 0.0;   // magnitude of the first omitted term
    bool   converged = true;  // implies est_error <= tol_abs + tol_rel*|result|
};

// Scalar result of an adaptive computation together with its report.
struct ValueReport {
    double value = 0.0;
    TruncationReport trunc;
};

// Evaluation mode for series with a divergent regime: adaptive evaluation
// applies the truncation policy and raises Divergence on sustained term
// growth; fixed-k returns a partial sum through k terms unconditionally.
struct EvalMode {
    enum class Kind { adaptive, fixed };
    Kind kind = Kind::adaptive;
    long k = 0;  // term count for fixed mode

    static EvalMode adaptive() { return EvalMode{Kind::adaptive, 0}; }
    static EvalMode fixed(long k_) {
        if (k_ < 0) throw DomainError("EvalMode::fixed: k must be nonnegative");
        return EvalMode{Kind::fixed, k_};
    }
};

} // namespace qfrac
