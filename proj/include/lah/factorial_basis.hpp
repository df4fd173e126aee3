#pragma once

#include <map>
#include <vector>

#include "lah/polynomial.hpp"
#include "lah/series.hpp"

namespace lah {

/// Rising factorial x(x+1)...(x+n-1) expanded into the monomial basis;
/// n = 0 gives the constant 1.
ExactPolynomial rising_factorial(unsigned long n);

/// Falling factorial x(x-1)...(x-n+1); n = 0 gives the constant 1.
ExactPolynomial falling_factorial(unsigned long n);

/// Coefficients [c_1, ..., c_n] with x(x+1)...(x+n-1) = sum_k c_k x(x-1)...(x-k+1),
/// found by back-substitution on the triangular falling-factorial basis.
/// Each c_k equals the Lah number L(n,k).
std::vector<Rat> rising_in_falling_coefficients(unsigned long n);

/// Expands sum_k coeffs[k-1] * falling_factorial(k) back to the monomial basis.
ExactPolynomial from_falling_basis(const std::vector<Rat>& coeffs);

/// Truncation of (1/k!) (x/(1-x))^k.  The coefficient of x^n is L(n,k)/n!.
/// Requires order >= k (below that every retained coefficient is zero,
/// which almost certainly means a caller error).
TruncatedSeries lah_generating_series(unsigned long k, unsigned long order);

/// Truncation of (-1)^k (1/k!) (x/(1+x))^k; coefficient of x^n is (-1)^n L(n,k)/n!.
TruncatedSeries alternating_generating_series(unsigned long k, unsigned long order);

/// The n-th derivative of e^{sign/x} written as e^{sign/x} * sum_j c_j x^{-j}.
/// For n >= 1 the nonzero exponents j run over n+1 .. 2n and
/// c_{n+k} = (-1)^n sign^k L(n,k).
struct LaurentExpDerivative {
    unsigned long n = 0;
    int sign = +1;                // e^{+1/x} or e^{-1/x}
    std::map<unsigned long, Rat> coeffs;  // exponent j -> coefficient of x^{-j}

    /// sum_j c_j x^{-j} at a rational point, exactly.
    Rat laurent_sum(const Rat& x) const;
    /// Full derivative value e^{sign/x} * laurent_sum(x) in double precision.
    double evaluate(double x) const;
};

/// Builds the coefficient map by repeated term-by-term differentiation
/// (c_j x^{-j} steps to -sign*c_j x^{-j-2} - j*c_j x^{-j-1}).  This is a
/// different computation from the closed-form coefficient formula above,
/// so the two can be checked against each other.
LaurentExpDerivative exp_reciprocal_derivative(unsigned long n, int sign);

}  // namespace lah
