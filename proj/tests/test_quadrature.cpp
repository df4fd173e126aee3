#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "lah/arith.hpp"
#include "lah/quadrature.hpp"

using namespace lah;

TEST_CASE("gamma tail closed form matches hand-derived small cases") {
    // p = 0: integral_T^inf e^{-ct} dt = e^{-cT}/c
    CHECK(gamma_tail_upper(0, 2.0, 1.5) == doctest::Approx(std::exp(-3.0) / 2.0).epsilon(1e-14));
    // p = 1: (T/c + 1/c^2) e^{-cT}
    CHECK(gamma_tail_upper(1, 1.0, 2.0) ==
          doctest::Approx(std::exp(-2.0) * (2.0 + 1.0)).epsilon(1e-14));
    // p = 2, c = 1: (T^2 + 2T + 2) e^{-T}
    CHECK(gamma_tail_upper(2, 1.0, 1.0) == doctest::Approx(5.0 * std::exp(-1.0)).epsilon(1e-14));
    // T = 0 reduces to the full gamma integral p!/c^{p+1}
    CHECK(gamma_tail_upper(3, 2.0, 0.0) == doctest::Approx(6.0 / 16.0).epsilon(1e-14));
    CHECK_THROWS_AS(gamma_tail_upper(1, 0.0, 1.0), std::domain_error);
}

TEST_CASE("exp-sqrt tail bound: validity threshold and majorisation") {
    const auto bound = exp_sqrt_tail_bound(2, 1.0, 1.0);
    CHECK(std::isinf(bound(1.0)));   // c sqrt(T) = 1 < 5: not yet valid
    CHECK(std::isinf(bound(16.0)));  // c sqrt(T) = 4 < 5
    const double b32 = bound(32.0);
    CHECK(std::isfinite(b32));
    CHECK(bound(64.0) < b32);  // decreasing once valid

    // the damped-rate majorisation t^p e^{2 sqrt t - ct} <= t^p e^{-c' t}
    // holds pointwise beyond T
    const double T = 32.0;
    const double damped = 1.0 - 2.0 / std::sqrt(T);
    for (double t : {32.0, 40.0, 64.0, 128.0, 1000.0}) {
        CHECK(std::exp(2.0 * std::sqrt(t) - t) <= std::exp(-damped * t) * (1.0 + 1e-12));
    }
}

TEST_CASE("plain exponential integrates to 1 with an honest error estimate") {
    const auto f = [](double t) { return std::exp(-t); };
    const QuadratureResult r = integrate_semi_infinite(f, gamma_tail_bound(0, 1.0, 1.0), 1e-12);
    CHECK(std::abs(r.value - 1.0) < 1e-12);
    CHECK(std::abs(r.value - 1.0) <= r.error_estimate);
    CHECK(r.error_estimate <= 1e-12);
    CHECK(r.truncation_point >= 1.0);
    CHECK(r.evaluations > 0);
}

TEST_CASE("moment integrals t^p e^{-t} hit p! within the estimate") {
    for (unsigned long p = 1; p <= 10; ++p) {
        const auto f = [p](double t) {
            return std::pow(t, static_cast<double>(p)) * std::exp(-t);
        };
        const double expected = factorial(p).get_d();
        const double tol = 1e-10 * expected;
        const QuadratureResult r =
            integrate_semi_infinite(f, gamma_tail_bound(p, 1.0, 1.0), tol);
        CAPTURE(p);
        CHECK(std::abs(r.value - expected) <= r.error_estimate);
        CHECK(r.error_estimate <= tol);
    }
}

TEST_CASE("results are deterministic and stable under a larger budget") {
    const auto f = [](double t) { return t * t * std::exp(-2.0 * t); };
    const auto tail = gamma_tail_bound(2, 2.0, 1.0);
    QuadratureOptions small;
    small.max_evaluations = 50000;
    QuadratureOptions large;
    large.max_evaluations = 100000;
    const QuadratureResult a = integrate_semi_infinite(f, tail, 1e-11, small);
    const QuadratureResult b = integrate_semi_infinite(f, tail, 1e-11, small);
    const QuadratureResult c = integrate_semi_infinite(f, tail, 1e-11, large);
    CHECK(a.value == b.value);
    CHECK(a.error_estimate == b.error_estimate);
    CHECK(a.evaluations == b.evaluations);
    // a successful run never consults the remaining budget
    CHECK(a.value == c.value);
    CHECK(a.evaluations == c.evaluations);
    CHECK(std::abs(a.value - 0.25) < 1e-11);  // 2!/2^3
}

TEST_CASE("exhausted budgets raise and carry the best partial result") {
    const auto f = [](double t) { return std::exp(-t); };
    QuadratureOptions tiny;
    tiny.max_evaluations = 100;  // room for the initial panels, no refinement
    bool thrown = false;
    try {
        integrate_semi_infinite(f, gamma_tail_bound(0, 1.0, 1.0), 1e-13, tiny);
    } catch (const quadrature_error& e) {
        thrown = true;
        CHECK(e.partial().evaluations > 0);
        CHECK(std::abs(e.partial().value - 1.0) < 1e-3);  // coarse but sane
        CHECK(e.partial().truncation_point >= 1.0);
    }
    CHECK(thrown);
}

TEST_CASE("tolerances below the double rounding floor are refused, not faked") {
    // Asking for ~1e-18 absolute error on a unit-sized integral is below what
    // double evaluation can certify; the estimate's rounding floor must keep
    // the refinement from ever reporting success.
    const auto f = [](double t) { return std::exp(-t); };
    CHECK_THROWS_AS(integrate_semi_infinite(f, gamma_tail_bound(0, 1.0, 1.0), 1e-17),
                    quadrature_error);
}

TEST_CASE("tail bound that never reaches tolerance raises from the search") {
    const auto hopeless = [](double) { return 1.0; };
    CHECK_THROWS_AS(select_truncation_point(hopeless, 1e-10, QuadratureOptions{}),
                    quadrature_error);
    CHECK_THROWS_AS(integrate_semi_infinite([](double) { return 0.0; }, hopeless, 1e-10),
                    quadrature_error);
    CHECK_THROWS_AS(
        integrate_semi_infinite([](double t) { return std::exp(-t); },
                                gamma_tail_bound(0, 1.0, 1.0), 0.0),
        std::domain_error);
}
