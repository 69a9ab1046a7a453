#include <doctest.h>

#include <cmath>

#include "qfrac/mittag.hpp"
#include "qfrac/qcore.hpp"

using namespace qfrac;

namespace {

double rel(double got, double want) {
    return std::fabs(got - want) / std::fabs(want);
}

} // namespace

TEST_CASE("double-index series anchor value is the q-exponential") {
    const QContext ctx(0.5);
    const MLDoubleParams p{1.0, 1.0, 1.0, 0.0};
    const ValueReport r = ml_double_eval(ctx, p, 1.0);
    // The default policy truncates at relative 1e-12; the anchor is exact
    // to far more digits than the evaluation can promise.
    CHECK(rel(r.value, 3.462746619455063611538) <= 5e-12);
    CHECK(r.trunc.converged);

    // Independent partial sum of the defining series.
    double direct = 0.0;
    for (int k = 0; k < 40; ++k) {
        direct += 1.0 / q_gamma(ctx, static_cast<double>(k) + 1.0);
    }
    CHECK(rel(r.value, direct) <= 5e-12);
}

TEST_CASE("double-index series handles a nonzero lower point and negative weight") {
    const QContext ctx(0.5);
    const MLDoubleParams p{0.5, 1.0, -0.7, 0.25};
    const ValueReport r = ml_double_eval(ctx, p, 1.0);
    double direct = 0.0;
    for (int k = 0; k < 60; ++k) {
        direct += std::pow(-0.7, k) *
                  q_factorial_power(ctx, 1.0, 0.25, 0.5 * k) /
                  q_gamma(ctx, 0.5 * k + 1.0);
    }
    CHECK(rel(r.value, direct) <= 1e-12);
}

TEST_CASE("double-index parameter validation") {
    const QContext ctx(0.5);
    CHECK_THROWS_AS(validate_ml_params(ctx, MLDoubleParams{0.0, 1.0, 1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(validate_ml_params(ctx, MLDoubleParams{0.5, 1.0, 1.0, -1.0}), DomainError);
    // beta = 0 puts the k = 0 term on a Gamma_q pole.
    CHECK_THROWS_AS(validate_ml_params(ctx, MLDoubleParams{0.5, 0.0, 1.0, 0.0}), PoleError);
    // Evaluation below the lower point is outside the domain.
    const MLDoubleParams p{0.5, 1.0, 0.2, 0.5};
    CHECK_THROWS_AS(ml_double_eval(ctx, p, 0.25), DomainError);
}

TEST_CASE("generalized coefficients telescope over the index") {
    const QContext ctx(0.5);
    const GMLParams p{0.5, 2.0, 0.5, 1.0, 0.0, 0};
    CHECK(gml_coefficient(ctx, p, 0) == 1.0);

    const double c1 = q_gamma(ctx, 0.5 * 0.5 + 1.0) / q_gamma(ctx, 0.5 * 1.5 + 1.0);
    CHECK(rel(gml_coefficient(ctx, p, 1), c1) <= 1e-13);

    double prod = 1.0;
    for (int j = 0; j < 3; ++j) {
        prod *= q_gamma(ctx, 0.5 * (2.0 * j + 0.5) + 1.0) /
                q_gamma(ctx, 0.5 * (2.0 * j + 0.5 + 1.0) + 1.0);
    }
    CHECK(rel(gml_coefficient(ctx, p, 3), prod) <= 1e-13);

    const detail::SignedLog lg = detail::log_gml_coefficient(ctx, p, 3);
    CHECK(lg.sign == 1);
    CHECK(rel(std::exp(static_cast<double>(lg.log_abs)), prod) <= 1e-13);
}

TEST_CASE("prefactor exponent is the closed quadratic in the index") {
    const GMLParams p{0.5, 2.0, 0.5, 1.0, 0.0, 3};
    CHECK(gml_prefactor_exponent(p, 0) == 0.0);
    // e_k = -k alpha (m-1) r - (k(k-1)/2) alpha (m-1) (alpha l + alpha).
    const double alpha = 0.5;
    const double m = 2.0;
    const double l = 0.5;
    const double r = 3.0;
    for (long k = 1; k <= 6; ++k) {
        const double kk = static_cast<double>(k);
        const double want = -kk * alpha * (m - 1.0) * r -
                            0.5 * kk * (kk - 1.0) * alpha * (m - 1.0) * (alpha * l + alpha);
        CHECK(gml_prefactor_exponent(p, k) == doctest::Approx(want).epsilon(1e-15));
    }
}

TEST_CASE("m = 1 reduces to the double-index form up to a constant factor") {
    const QContext ctx(0.5);
    for (const double l : {0.0, 0.5, 1.0}) {
        const GMLParams gp{0.5, 1.0, l, 0.4, 0.0, 0};
        const MLDoubleParams mp{0.5, 0.5 * l + 1.0, 0.4, 0.0};
        const double factor = q_gamma(ctx, 0.5 * l + 1.0);
        const double got = gml_eval(ctx, gp, 1.0).value;
        const double want = factor * ml_double_eval(ctx, mp, 1.0).value;
        CHECK(rel(got, want) <= 1e-12);
    }
}

TEST_CASE("generalized series diverges adaptively for m above one") {
    const QContext ctx(0.5, 1e-14, 1e-12, 50);
    const GMLParams p{0.5, 2.0, 0.0, 1.0, 0.0, 0};
    CHECK_THROWS_AS(gml_eval(ctx, p, 1.0), Divergence);
    // The fixed-mode partial sum stays available and flags non-convergence.
    const ValueReport r = gml_eval(ctx, p, 1.0, EvalMode::fixed(5));
    CHECK(std::isfinite(r.value));
    CHECK_FALSE(r.trunc.converged);
    CHECK(r.trunc.terms_used == 6);
    CHECK(r.trunc.est_error > 0.0);
}

TEST_CASE("generalized series at the lower point is exactly one") {
    const QContext ctx(0.5);
    const GMLParams p{0.5, 2.0, 0.0, 1.0, 0.0, 0};
    CHECK(gml_eval(ctx, p, 0.0).value == 1.0);
    const GMLParams q{0.5, 2.0, 0.0, 1.0, 0.5, 0};
    CHECK(gml_eval(ctx, q, 0.5).value == 1.0);
}

TEST_CASE("generalized parameter validation") {
    const QContext ctx(0.5);
    CHECK_THROWS_AS(validate_gml_params(ctx, GMLParams{-0.5, 1.0, 0.0, 1.0, 0.0, 0}),
                    DomainError);
    CHECK_THROWS_AS(validate_gml_params(ctx, GMLParams{0.5, 0.0, 0.0, 1.0, 0.0, 0}),
                    DomainError);
    CHECK_THROWS_AS(validate_gml_params(ctx, GMLParams{0.5, 1.0, 0.0, 1.0, -1.0, 0}),
                    DomainError);
    CHECK_THROWS_AS(validate_gml_params(ctx, GMLParams{0.5, 1.0, 0.0, 1.0, 0.0, -1}),
                    DomainError);
    // alpha l + 1 = 0 is a pole of the k = 1 coefficient.
    CHECK_THROWS_AS(validate_gml_params(ctx, GMLParams{0.5, 1.0, -2.0, 1.0, 0.0, 0}),
                    PoleError);
    // x below the lower point is outside the domain.
    const GMLParams p{0.5, 1.0, 0.0, 1.0, 0.5, 0};
    CHECK_THROWS_AS(gml_eval(ctx, p, 0.25), DomainError);
}

TEST_CASE("zero weight collapses the series to one") {
    const QContext ctx(0.5);
    const GMLParams p{0.5, 2.0, 0.5, 0.0, 0.0, 0};
    const ValueReport r = gml_eval(ctx, p, 1.0);
    CHECK(r.value == 1.0);
    CHECK(r.trunc.converged);
}
