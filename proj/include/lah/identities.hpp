#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "lah/arith.hpp"
#include "lah/quadrature.hpp"

namespace lah {

// Result of checking one closed form against its integral representation.
// `rhs.value` holds the complete right-hand side (any additive constant or
// prefactor outside the integral is already folded in); the other rhs fields
// describe the quadrature that produced it.  The pass rule is relative when
// |lhs| >= 1 and absolute otherwise, so tiny values near the double floor
// are not held to an impossible relative bar.
struct IdentityReport {
    std::string identity_id;
    std::map<std::string, double> parameters;
    double lhs = 0.0;
    QuadratureResult rhs;
    double abs_error = 0.0;
    double rel_error = 0.0;
    bool passed = false;
};

// e^{1/z} = 1 + integral_0^inf I_1(2 sqrt t)/sqrt t * e^{-z t} dt  for z > 0.
IdentityReport verify_exp_representation(double z, double tol,
                                         const QuadratureOptions& options = {});

// H_k(z) = e^{1/z} - sum_{m=0}^{k} z^{-m}/m!  equals
//   1/(k!(k+1)!) integral_0^inf 1F2(1; k+2, k+1; t) t^k e^{-z t} dt  for z > 0.
IdentityReport verify_hk_representation(unsigned long k, double z, double tol,
                                        const QuadratureOptions& options = {});

// (-1)^n d^n/dx^n e^{1/x} = integral_0^inf I_1(2 sqrt t) t^{n - 1/2} e^{-x t} dt
// for x > 0, n >= 1; the left side is evaluated through the exact Laurent
// expansion of the n-th derivative.
IdentityReport verify_derivative_representation(unsigned long n, double x, double tol,
                                                const QuadratureOptions& options = {});

// sum_{k=1}^{n} L(n,k) x^k =
//   (e^{-x}/x^n) integral_0^inf I_1(2 sqrt t) t^{n - 1/2} e^{-t/x} dt  for x > 0.
// The polynomial side is evaluated in exact rational arithmetic.
IdentityReport verify_lah_sum_representation(unsigned long n, double x, double tol,
                                             const QuadratureOptions& options = {});

// sum_{k=1}^{n} L(n,k) = integral_0^inf I_1(2 sqrt t) t^{n - 1/2} e^{-(1 + t)} dt.
IdentityReport verify_total_sum_integral(unsigned long n, double tol,
                                         const QuadratureOptions& options = {});

// Two-step check of the summed-polynomial closed form for k >= 1, x >= 0:
//  (a) 1/(1+x)^k = integral_0^inf t^{k-1}/ (k-1)! * e^{-(1+x) t} dt  (quadrature),
//  (b) the closed form ((m+k)!/k!) C(m+k-1, k-1) equals L(m+k, k)  (exact).
// passed requires both; an exact mismatch in (b) can never be a tolerance
// issue and fails the report outright.
IdentityReport verify_recovery_chain(unsigned long m, unsigned long k, double x, double tol,
                                     const QuadratureOptions& options = {});

// Calibration on a known value: integral_0^inf t^{k-1} e^{-t} dt = (k-1)!
// for k >= 1.  Used to confirm the error estimate bounds the true error.
IdentityReport verify_gamma_integral(unsigned long k, double tol,
                                     const QuadratureOptions& options = {});

// m-fold derivative of sum_k L(n,k) x^k at x = 0, divided by m!.  Equals
// L(n,m); this realises the x -> 0 limit statement for the ratio
// (row polynomial)/x^m symbolically, where a direct numeric limit would be
// ill-conditioned.
Int lah_from_polynomial_derivative(unsigned long n, unsigned long m);

// JSON rendering with fields exactly as typed above.  Integer-valued
// parameters serialize as JSON integers; a rel_error of infinity (lhs = 0)
// serializes as null.
nlohmann::json report_to_json(const IdentityReport& report);

}  // namespace lah
