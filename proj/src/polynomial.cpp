#include "lah/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace lah {

ExactPolynomial::ExactPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

ExactPolynomial ExactPolynomial::constant(const Rat& c) {
    return ExactPolynomial(std::vector<Rat>{c});
}

ExactPolynomial ExactPolynomial::x() {
    return ExactPolynomial(std::vector<Rat>{Rat(0), Rat(1)});
}

void ExactPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

unsigned long ExactPolynomial::degree() const {
    return coeffs_.empty() ? 0 : coeffs_.size() - 1;
}

Rat ExactPolynomial::coeff(unsigned long k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rat(0);
}

const Rat& ExactPolynomial::leading_coeff() const {
    if (coeffs_.empty()) throw std::domain_error("leading_coeff of zero polynomial");
    return coeffs_.back();
}

ExactPolynomial ExactPolynomial::operator+(const ExactPolynomial& other) const {
    std::vector<Rat> out(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::operator-(const ExactPolynomial& other) const {
    return *this + (-other);
}

ExactPolynomial ExactPolynomial::operator-() const {
    std::vector<Rat> out = coeffs_;
    for (Rat& c : out) c = -c;
    return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::operator*(const ExactPolynomial& other) const {
    if (is_zero() || other.is_zero()) return ExactPolynomial();
    std::vector<Rat> out(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::operator*(const Rat& scalar) const {
    std::vector<Rat> out = coeffs_;
    for (Rat& c : out) c *= scalar;
    return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return ExactPolynomial();
    std::vector<Rat> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::compose(const ExactPolynomial& inner) const {
    ExactPolynomial result;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        result = result * inner + constant(*it);
    return result;
}

Rat ExactPolynomial::evaluate(const Rat& x) const {
    Rat result(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) result = result * x + *it;
    return result;
}

PolyDivision divide(const ExactPolynomial& num, const ExactPolynomial& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    ExactPolynomial rem = num;
    std::vector<Rat> q(num.degree() >= den.degree() ? num.degree() - den.degree() + 1 : 0, Rat(0));
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        unsigned long shift = rem.degree() - den.degree();
        Rat factor = rem.leading_coeff() / den.leading_coeff();
        q[shift] = factor;
        std::vector<Rat> mono(shift + 1, Rat(0));
        mono[shift] = factor;
        rem = rem - den * ExactPolynomial(std::move(mono));
    }
    return {ExactPolynomial(std::move(q)), rem};
}

ExactPolynomial poly_gcd(ExactPolynomial a, ExactPolynomial b) {
    while (!b.is_zero()) {
        ExactPolynomial r = divide(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rat(1) / a.leading_coeff());
}

}  // namespace lah
