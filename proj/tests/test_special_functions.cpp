#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "lah/arith.hpp"
#include "lah/special_functions.hpp"

using namespace lah;

TEST_CASE("modified Bessel I1 against the standard-library implementation") {
    CHECK(bessel_i1(0.0, 1e-14).value == 0.0);
    const double frozen_i1_2 = 1.5906368546373290;  // I1(2)
    CHECK(std::abs(bessel_i1(2.0, 1e-15).value - frozen_i1_2) < 1e-14);
    for (double z : {0.3, 1.0, 2.0, 5.0, 10.0, 30.0}) {
        const SeriesValue got = bessel_i1(z, 1e-14 * std::cosh(z));
        const double want = std::cyl_bessel_i(1.0, z);
        CAPTURE(z);
        CHECK(std::abs(got.value - want) <= 1e-12 * want);
    }
}

TEST_CASE("series invariants: positivity, term counts, tail bound honesty") {
    const SeriesValue v = bessel_i1(1.0, 1e-13);
    CHECK(v.value > 0.5);  // first term alone is z/2 = 0.5 and all terms add
    CHECK(v.terms_used >= 1);
    CHECK(v.tail_bound < 1e-13);
    CHECK(v.tail_bound >= 0.0);

    // re-summing with a much tighter tolerance moves the value by no more
    // than the reported tail bound
    const SeriesValue loose = bessel_i1(3.0, 1e-6);
    const SeriesValue tight = bessel_i1(3.0, 1e-15);
    CHECK(std::abs(tight.value - loose.value) <= loose.tail_bound + 1e-15 * tight.value);
    CHECK(tight.terms_used >= loose.terms_used);
}

TEST_CASE("unreachable tolerances raise instead of returning silently") {
    CHECK_THROWS_AS(bessel_i1(2.0, 1e-300, 5), tolerance_unreachable_error);
    CHECK_THROWS_AS(hypergeom_1f2(0, 4.0, 1e-300, 3), tolerance_unreachable_error);
    CHECK_THROWS_AS(bessel_i1(-1.0, 1e-10), std::domain_error);
    CHECK_THROWS_AS(bessel_i1(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(hypergeom_1f2(1, -0.5, 1e-10), std::domain_error);
}

TEST_CASE("1F2 ties to I1 through 1F2(1;1,2;t) = I1(2 sqrt t)/sqrt t") {
    CHECK(hypergeom_1f2(0, 0.0, 1e-14).value == 1.0);
    for (double z : {0.5, 1.0, 2.0, 4.0}) {
        const double t = 0.25 * z * z;
        const double lhs = hypergeom_1f2(0, t, 1e-14).value;
        const double rhs = bessel_i1(z, 1e-16 * std::cosh(z)).value / (0.5 * z);
        CAPTURE(z);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
    }
    // larger k only shrinks the terms: 1F2(1; k+1, k+2; t) decreases in k
    const double t = 2.0;
    double prev = hypergeom_1f2(0, t, 1e-14).value;
    for (unsigned long k = 1; k <= 6; ++k) {
        const double cur = hypergeom_1f2(k, t, 1e-14).value;
        CHECK(cur < prev);
        CHECK(cur >= 1.0);  // all terms positive, leading term 1
        prev = cur;
    }
}

TEST_CASE("exponential remainder H_k: frozen values and monotone decay") {
    // H_2(2) = e^{1/2} - (1 + 1/2 + 1/8)
    CHECK(std::abs(h_k_closed_form(2, 2.0) - 0.023721270700128147) < 1e-15);
    // H_0(1) = e - 1
    CHECK(std::abs(h_k_closed_form(0, 1.0) - (std::exp(1.0) - 1.0)) < 1e-15);

    double prev = h_k_closed_form(0, 2.0);
    for (unsigned long k = 1; k <= 10; ++k) {
        const double cur = h_k_closed_form(k, 2.0);
        CAPTURE(k);
        CHECK(cur > 0.0);   // the dropped terms of e^{1/z} are all positive
        CHECK(cur < prev);  // each k removes one more positive term
        prev = cur;
    }
    CHECK_THROWS_AS(h_k_closed_form(3, 0.0), std::domain_error);
}
