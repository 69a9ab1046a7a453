#include <doctest.h>

#include <cmath>
#include <limits>
#include <optional>

#include "qfrac/qcore.hpp"

using namespace qfrac;

namespace {

// Reference values computed with an independent arbitrary-precision
// implementation of the defining products (30 significant digits).
constexpr double kGamma15Q05 = 0.9208754502712837898576;
constexpr double kGamma05Q05 = 1.572032725786323882771;
constexpr double kGamma05Q03 = 1.457120738697573892;
constexpr double kGamma15Q03 = 0.94146120157760264252;
constexpr double kGamma25Q03 = 1.123947629202301811;
constexpr double kGamma05Q08 = 1.7015888837228498154;
constexpr double kGamma15Q08 = 0.89820759108969386301;
constexpr double kGamma25Q08 = 1.2775127849158455053;

double rel(double got, double want) {
    return std::fabs(got - want) / std::fabs(want);
}

} // namespace

TEST_CASE("context validates its arguments") {
    CHECK_THROWS_AS(QContext(0.0), DomainError);
    CHECK_THROWS_AS(QContext(1.0), DomainError);
    CHECK_THROWS_AS(QContext(-0.5), DomainError);
    CHECK_THROWS_AS(QContext(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(QContext(0.5, 1e-14, -1.0), DomainError);
    CHECK_THROWS_AS(QContext(0.5, 1e-14, 1e-12, 0), DomainError);
    const QContext ctx(0.25, 1e-10, 0.0, 7);
    const QContext moved = ctx.with_q(0.75);
    CHECK(moved.q == 0.75);
    CHECK(moved.tol_abs == 1e-10);
    CHECK(moved.tol_rel == 0.0);
    CHECK(moved.max_terms == 7);
}

TEST_CASE("q-bracket special values and limit behavior") {
    const QContext ctx(0.5);
    CHECK(q_bracket(ctx, 0.0) == 0.0);
    CHECK(q_bracket(ctx, 1.0) == 1.0);
    CHECK(q_bracket(ctx, 2.0) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(q_bracket(ctx, 3.0) == doctest::Approx(1.75).epsilon(1e-15));
    // [x]_q = (1 - q^x)/(1 - q) holds for negative and fractional x.
    CHECK(q_bracket(ctx, -1.0) == doctest::Approx((1.0 - 2.0) / 0.5).epsilon(1e-15));
    CHECK(q_bracket(ctx, 0.5) ==
          doctest::Approx((1.0 - std::sqrt(0.5)) / 0.5).epsilon(1e-15));
}

TEST_CASE("q-Pochhammer finite products match direct evaluation") {
    const QContext ctx(0.5);
    ValueReport r = q_pochhammer(ctx, 0.3, 0);
    CHECK(r.value == 1.0);
    CHECK(r.trunc.terms_used == 0);
    CHECK(r.trunc.est_error == 0.0);

    r = q_pochhammer(ctx, 0.3, 3);
    const double direct = (1.0 - 0.3) * (1.0 - 0.3 * 0.5) * (1.0 - 0.3 * 0.25);
    CHECK(r.value == doctest::Approx(direct).epsilon(1e-15));
    CHECK(r.trunc.terms_used == 3);
    CHECK(r.trunc.converged);
}

TEST_CASE("q-Pochhammer infinite product converges and reports truncation") {
    const QContext ctx(0.5);
    const ValueReport r = q_pochhammer(ctx, 0.5, std::nullopt);
    // (q; q)_inf at q = 0.5; factors 1 - q^{i+1} monotonically approach 1.
    double direct = 1.0;
    for (int i = 0; i < 80; ++i) direct *= 1.0 - 0.5 * std::pow(0.5, i);
    CHECK(r.value == doctest::Approx(direct).epsilon(1e-13));
    CHECK(r.trunc.converged);
    CHECK(r.trunc.est_error <= ctx.tol_abs + ctx.tol_rel * std::fabs(r.value));
}

TEST_CASE("q-Pochhammer raises when the term budget is exhausted") {
    const QContext tight(0.5, 1e-14, 1e-12, 4);
    CHECK_THROWS_AS(q_pochhammer(tight, 0.9, std::nullopt), NonConvergence);
}

TEST_CASE("q-Gamma anchor values") {
    const QContext ctx(0.5);
    CHECK(q_gamma(ctx, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(q_gamma(ctx, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
    // Gamma_q(n+1) = [n]_q! on integers.
    CHECK(q_gamma(ctx, 3.0) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(q_gamma(ctx, 4.0) == doctest::Approx(1.5 * 1.75).epsilon(1e-14));

    CHECK(rel(q_gamma(ctx, 1.5), kGamma15Q05) <= 1e-14);
    CHECK(rel(q_gamma(ctx, 0.5), kGamma05Q05) <= 1e-14);

    const QContext low = ctx.with_q(0.3);
    CHECK(rel(q_gamma(low, 0.5), kGamma05Q03) <= 1e-14);
    CHECK(rel(q_gamma(low, 1.5), kGamma15Q03) <= 1e-14);
    CHECK(rel(q_gamma(low, 2.5), kGamma25Q03) <= 1e-14);

    const QContext high = ctx.with_q(0.8);
    CHECK(rel(q_gamma(high, 0.5), kGamma05Q08) <= 1e-14);
    CHECK(rel(q_gamma(high, 1.5), kGamma15Q08) <= 1e-14);
    CHECK(rel(q_gamma(high, 2.5), kGamma25Q08) <= 1e-14);
}

TEST_CASE("q-Gamma satisfies its recurrence off the integers") {
    const QContext ctx(0.5);
    for (const double x : {0.3, 0.7, 1.6, 2.2, 3.9, 7.5}) {
        const double lhs = q_gamma(ctx, x + 1.0);
        const double rhs = q_bracket(ctx, x) * q_gamma(ctx, x);
        CHECK(rel(lhs, rhs) <= 1e-13);
    }
}

TEST_CASE("q-Gamma poles raise and nearby points do not") {
    const QContext ctx(0.5);
    CHECK_THROWS_AS(q_gamma(ctx, 0.0), PoleError);
    CHECK_THROWS_AS(q_gamma(ctx, -1.0), PoleError);
    CHECK_THROWS_AS(q_gamma(ctx, -2.0 + 5e-13), PoleError);
    CHECK_NOTHROW(q_gamma(ctx, -0.5));
    CHECK_NOTHROW(q_gamma(ctx, -1.5));
    // A pole is detected within 1e-12 only.
    CHECK_NOTHROW(q_gamma(ctx, -1.0 + 1e-9));
}

TEST_CASE("q-Gamma is negative between consecutive negative poles") {
    const QContext ctx(0.5);
    CHECK(q_gamma(ctx, -0.5) < 0.0);
    CHECK(q_gamma(ctx, -1.5) > 0.0);
    CHECK(q_gamma(ctx, -2.5) < 0.0);
}

TEST_CASE("reported q-Gamma carries a meaningful truncation report") {
    const QContext ctx(0.5);
    const ValueReport r = detail::q_gamma_reported(ctx, 3.0);
    CHECK(r.value == doctest::Approx(q_gamma(ctx, 3.0)).epsilon(1e-15));
    CHECK(r.trunc.terms_used > 0);
    CHECK(r.trunc.converged);
    CHECK(r.trunc.est_error >= 0.0);
    CHECK(r.trunc.est_error <= 1e-15 * std::fabs(r.value));
}

TEST_CASE("log-space q-Gamma agrees with the direct value and tracks sign") {
    const QContext ctx(0.5);
    for (const double x : {0.5, 1.5, 3.0, 10.0, -0.5, -1.5, -2.5}) {
        const detail::SignedLog lg = detail::log_q_gamma(ctx, x);
        const double direct = q_gamma(ctx, x);
        CHECK(lg.sign == (direct < 0.0 ? -1 : 1));
        CHECK(rel(static_cast<double>(lg.sign) * std::exp(static_cast<double>(lg.log_abs)),
                  direct) <= 1e-13);
    }
}

TEST_CASE("q-Gamma ratio stays finite where the direct quotient would overflow") {
    const QContext ctx(0.5);
    // Gamma_q grows like (1-q)^{1-x}; x = 2000 overflows double on its own.
    const long double ratio = detail::q_gamma_ratio(ctx, 2001.0, 2000.0);
    CHECK(static_cast<double>(ratio) ==
          doctest::Approx(q_bracket(ctx, 2000.0)).epsilon(1e-12));
}

TEST_CASE("q-factorial power with integer exponent is the finite product") {
    const QContext ctx(0.5);
    CHECK(q_factorial_power(ctx, 3.0, 2.0, 0.0) == 1.0);
    CHECK(q_factorial_power(ctx, 3.0, 2.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    // (t - s)(t - q s) with t = 3, s = 2, q = 0.5.
    CHECK(q_factorial_power(ctx, 3.0, 2.0, 2.0) ==
          doctest::Approx(1.0 * 2.0).epsilon(1e-15));
    // Integer form accepts any sign of t and s.
    CHECK(q_factorial_power(ctx, -1.0, 2.0, 2.0) ==
          doctest::Approx((-3.0) * (-2.0)).epsilon(1e-15));
}

TEST_CASE("q-factorial power with zero lower point reduces to a plain power") {
    const QContext ctx(0.5);
    for (const double gamma : {0.5, 1.3, -0.7, 2.0}) {
        CHECK(rel(q_factorial_power(ctx, 2.0, 0.0, gamma), std::pow(2.0, gamma)) <= 1e-13);
    }
}

TEST_CASE("q-factorial power edge cases at coincident points") {
    const QContext ctx(0.5);
    CHECK(q_factorial_power(ctx, 2.0, 2.0, 0.5) == 0.0);
    CHECK(q_factorial_power(ctx, 2.0, 2.0, 2.0) == 0.0);
    CHECK_THROWS_AS(q_factorial_power(ctx, 2.0, 2.0, -0.5), DomainError);
}

TEST_CASE("q-factorial power domain errors") {
    const QContext ctx(0.5);
    // s/t > 1 leaves the convergence region of the infinite form.
    CHECK_THROWS_AS(q_factorial_power(ctx, 1.0, 2.0, 0.5), DomainError);
    // Negative t has no fractional power.
    CHECK_THROWS_AS(q_factorial_power(ctx, -1.0, 0.5, 0.5), DomainError);
    // Negative integer exponent hits a vanishing denominator factor on the grid.
    CHECK_THROWS_AS(q_factorial_power(ctx, 1.0, 0.5, -1.0), DomainError);
}

TEST_CASE("q-factorial power addition law in the exponent") {
    const QContext ctx(0.5);
    // (t-s)^{beta+gamma} = (t-s)^beta (t - q^beta s)^gamma on the grid.
    const double t = 1.0;
    const double s = t * std::pow(0.5, 3);
    for (const double beta : {0.4, 1.2}) {
        for (const double gamma : {0.3, 0.9}) {
            const double lhs = q_factorial_power(ctx, t, s, beta + gamma);
            const double rhs = q_factorial_power(ctx, t, s, beta) *
                               q_factorial_power(ctx, t, std::pow(0.5, beta) * s, gamma);
            CHECK(rel(lhs, rhs) <= 1e-13);
        }
    }
}

TEST_CASE("log-space q-factorial power agrees with the direct value") {
    const QContext ctx(0.5);
    const double t = 4.0;
    const double s = 1.0;
    for (const double gamma : {0.5, 1.7, -0.3}) {
        const detail::SignedLog lg = detail::log_q_factorial_power(ctx, t, s, gamma);
        const double direct = q_factorial_power(ctx, t, s, gamma);
        CHECK(rel(static_cast<double>(lg.sign) * std::exp(static_cast<double>(lg.log_abs)),
                  direct) <= 1e-13);
    }
    // An exactly zero power maps to log 0.
    const detail::SignedLog zero = detail::log_q_factorial_power(ctx, 2.0, 2.0, 0.5);
    CHECK(std::isinf(static_cast<double>(zero.log_abs)));
    CHECK(zero.log_abs < 0.0L);
}

TEST_CASE("reported q-factorial power matches the plain one") {
    const QContext ctx(0.5);
    const ValueReport r = detail::q_factorial_power_reported(ctx, 3.0, 1.0, 0.7);
    CHECK(r.value == doctest::Approx(q_factorial_power(ctx, 3.0, 1.0, 0.7)).epsilon(1e-15));
    CHECK(r.trunc.converged);
    // The integer path is exact and reports it.
    const ValueReport exact = detail::q_factorial_power_reported(ctx, 3.0, 1.0, 2.0);
    CHECK(exact.trunc.est_error == 0.0);
    CHECK(exact.trunc.terms_used == 2);
}

TEST_CASE("nonpositive-integer detector uses the 1e-12 window") {
    CHECK(detail::near_nonpositive_integer(0.0));
    CHECK(detail::near_nonpositive_integer(-3.0));
    CHECK(detail::near_nonpositive_integer(-3.0 + 5e-13));
    CHECK_FALSE(detail::near_nonpositive_integer(-3.0 + 1e-9));
    CHECK_FALSE(detail::near_nonpositive_integer(1.0));
    CHECK_FALSE(detail::near_nonpositive_integer(-0.5));
}
