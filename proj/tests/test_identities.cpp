#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "lah/identities.hpp"
#include "lah/lah_numbers.hpp"

using namespace lah;

namespace {
constexpr double kTol = 1e-9;
}

TEST_CASE("exponential of a reciprocal matches its integral form") {
    const IdentityReport r1 = verify_exp_representation(1.0, kTol);
    CHECK(r1.identity_id == "exp_reciprocal_integral");
    CHECK(r1.lhs == std::exp(1.0));
    CHECK(r1.passed);
    CHECK(r1.rel_error <= kTol);
    CHECK(std::abs(r1.rhs.value - std::exp(1.0)) <= kTol * std::exp(1.0));

    const IdentityReport r2 = verify_exp_representation(2.0, kTol);
    CHECK(r2.lhs == std::exp(0.5));
    CHECK(r2.passed);
}

TEST_CASE("remainder terms of exp(1/z) match their integral form") {
    const IdentityReport r0 = verify_hk_representation(0, 1.0, kTol);
    CHECK(r0.lhs == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
    CHECK(r0.passed);

    // |lhs| < 1 here, so the pass rule is the absolute one
    const IdentityReport r1 = verify_hk_representation(1, 1.0, kTol);
    CHECK(r1.lhs == doctest::Approx(std::exp(1.0) - 2.0).epsilon(1e-14));
    CHECK(r1.abs_error <= kTol);
    CHECK(r1.passed);

    const IdentityReport r2 = verify_hk_representation(2, 2.0, kTol);
    CHECK(r2.lhs == doctest::Approx(0.023721270700128147).epsilon(1e-13));
    CHECK(r2.passed);
}

TEST_CASE("n-th derivative of exp(1/x) matches its integral form") {
    const IdentityReport r1 = verify_derivative_representation(1, 1.0, kTol);
    CHECK(r1.lhs == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
    CHECK(r1.passed);

    const IdentityReport r2 = verify_derivative_representation(2, 1.0, kTol);
    CHECK(r2.lhs == doctest::Approx(3.0 * std::exp(1.0)).epsilon(1e-14));
    CHECK(r2.passed);

    // n = 3, x = 2: the Laurent side is exp(1/2) (6/16 + 6/32 + 1/64)
    const IdentityReport r3 = verify_derivative_representation(3, 2.0, kTol);
    CHECK(r3.lhs == doctest::Approx(std::exp(0.5) * 0.578125).epsilon(1e-14));
    CHECK(r3.passed);
}

TEST_CASE("row polynomial sums match their integral form") {
    const IdentityReport r1 = verify_lah_sum_representation(1, 1.0, kTol);
    CHECK(r1.lhs == 1.0);
    CHECK(r1.passed);

    const IdentityReport r3 = verify_lah_sum_representation(3, 1.0, kTol);
    CHECK(r3.lhs == 13.0);  // 6 + 6 + 1
    CHECK(r3.passed);

    // x = 1/2 is dyadic, so the exact rational evaluation converts losslessly
    const IdentityReport r4 = verify_lah_sum_representation(4, 0.5, kTol);
    CHECK(r4.lhs == 22.5625);  // 24/2 + 36/4 + 12/8 + 1/16
    CHECK(r4.passed);

    const IdentityReport r22 = verify_lah_sum_representation(2, 2.0, kTol);
    CHECK(r22.lhs == 8.0);  // 2*2 + 1*4
    CHECK(r22.passed);
}

TEST_CASE("row totals match their integral form") {
    const IdentityReport r = verify_total_sum_integral(4, kTol);
    CHECK(r.lhs == 73.0);
    CHECK(r.passed);
    CHECK(r.rel_error <= kTol);
}

TEST_CASE("recovery chain: geometric-kernel integral plus exact closed form") {
    const IdentityReport r1 = verify_recovery_chain(1, 1, 0.0, kTol);
    CHECK(r1.lhs == 1.0);
    CHECK(r1.passed);

    const IdentityReport r2 = verify_recovery_chain(3, 3, 1.0, kTol);
    CHECK(r2.lhs == 0.125);
    CHECK(r2.abs_error <= kTol);
    CHECK(r2.passed);
}

TEST_CASE("gamma calibration: the estimate bounds the true error") {
    const IdentityReport r = verify_gamma_integral(5, kTol);
    CHECK(r.lhs == 24.0);
    CHECK(std::abs(r.rhs.value - 24.0) <= r.rhs.error_estimate);
    CHECK(r.passed);
}

TEST_CASE("row coefficients recovered by differentiating the row polynomial") {
    CHECK(lah_from_polynomial_derivative(4, 2) == Int(36));
    for (unsigned long n = 1; n <= 6; ++n) {
        for (unsigned long m = 1; m <= n + 1; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(lah_from_polynomial_derivative(n, m) == lah::lah(n, m));
        }
    }
    CHECK_THROWS_AS(lah_from_polynomial_derivative(0, 1), std::domain_error);
    CHECK_THROWS_AS(lah_from_polynomial_derivative(3, 0), std::domain_error);
}

TEST_CASE("reports serialize with typed parameters and nullable rel_error") {
    const IdentityReport r = verify_gamma_integral(5, kTol);
    const nlohmann::json j = report_to_json(r);
    CHECK(j["identity_id"] == "gamma_integral");
    CHECK(j["parameters"]["k"].is_number_integer());
    CHECK(j["parameters"]["k"] == 5);
    CHECK(j["passed"].is_boolean());
    CHECK(j["rel_error"].is_number());
    CHECK(j["rhs"]["evaluations"].is_number_integer());
    CHECK(j["rhs"]["evaluations"] > 0);

    IdentityReport zero_lhs;
    zero_lhs.identity_id = "synthetic";
    zero_lhs.parameters = {{"x", 0.75}};
    zero_lhs.rel_error = std::numeric_limits<double>::infinity();
    const nlohmann::json jz = report_to_json(zero_lhs);
    CHECK(jz["rel_error"].is_null());
    CHECK(jz["parameters"]["x"].is_number_float());
}

TEST_CASE("verification rejects out-of-domain arguments") {
    CHECK_THROWS_AS(verify_exp_representation(0.0, kTol), std::domain_error);
    CHECK_THROWS_AS(verify_exp_representation(-1.0, kTol), std::domain_error);
    CHECK_THROWS_AS(verify_exp_representation(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(verify_hk_representation(1, 0.0, kTol), std::domain_error);
    CHECK_THROWS_AS(verify_derivative_representation(0, 1.0, kTol), std::domain_error);
    CHECK_THROWS_AS(verify_derivative_representation(1, 0.0, kTol), std::domain_error);
    CHECK_THROWS_AS(verify_lah_sum_representation(0, 1.0, kTol), std::domain_error);
    CHECK_THROWS_AS(verify_total_sum_integral(0, kTol), std::domain_error);
    CHECK_THROWS_AS(verify_recovery_chain(1, 0, 0.0, kTol), std::domain_error);
    CHECK_THROWS_AS(verify_recovery_chain(1, 1, -0.5, kTol), std::domain_error);
    CHECK_THROWS_AS(verify_gamma_integral(0, kTol), std::domain_error);
}
