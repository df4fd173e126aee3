#pragma once

#include <vector>

#include "lah/arith.hpp"

namespace lah {

/// Dense univariate polynomial with exact rational coefficients,
/// coeffs[k] multiplying x^k.  Kept trimmed: no trailing zero coefficient,
/// and the zero polynomial is the empty coefficient list.
class ExactPolynomial {
  public:
    ExactPolynomial() = default;
    explicit ExactPolynomial(std::vector<Rat> coeffs);
    static ExactPolynomial constant(const Rat& c);
    static ExactPolynomial x();

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as 0.
    unsigned long degree() const;
    Rat coeff(unsigned long k) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& leading_coeff() const;

    ExactPolynomial operator+(const ExactPolynomial& other) const;
    ExactPolynomial operator-(const ExactPolynomial& other) const;
    ExactPolynomial operator*(const ExactPolynomial& other) const;
    ExactPolynomial operator*(const Rat& scalar) const;
    ExactPolynomial operator-() const;
    bool operator==(const ExactPolynomial& other) const = default;

    ExactPolynomial derivative() const;
    /// p(q(x)), evaluated by Horner over polynomials.
    ExactPolynomial compose(const ExactPolynomial& inner) const;
    Rat evaluate(const Rat& x) const;

  private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// Quotient and remainder of exact polynomial division (deg r < deg d).
struct PolyDivision {
    ExactPolynomial quotient;
    ExactPolynomial remainder;
};
PolyDivision divide(const ExactPolynomial& num, const ExactPolynomial& den);

/// Monic gcd via the Euclidean algorithm over rationals.
ExactPolynomial poly_gcd(ExactPolynomial a, ExactPolynomial b);

}  // namespace lah
