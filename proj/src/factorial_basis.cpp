#include "lah/factorial_basis.hpp"

#include <cmath>
#include <stdexcept>

namespace lah {

ExactPolynomial rising_factorial(unsigned long n) {
    ExactPolynomial p = ExactPolynomial::constant(Rat(1));
    for (unsigned long i = 0; i < n; ++i) {
        ExactPolynomial factor(std::vector<Rat>{Rat(static_cast<long>(i)), Rat(1)});
        p = p * factor;  // x + i
    }
    return p;
}

ExactPolynomial falling_factorial(unsigned long n) {
    ExactPolynomial p = ExactPolynomial::constant(Rat(1));
    for (unsigned long i = 0; i < n; ++i) {
        ExactPolynomial factor(std::vector<Rat>{Rat(-static_cast<long>(i)), Rat(1)});
        p = p * factor;  // x - i
    }
    return p;
}

std::vector<Rat> rising_in_falling_coefficients(unsigned long n) {
    if (n == 0)
        throw std::domain_error("rising_in_falling_coefficients: n >= 1 required");
    std::vector<Rat> c(n, Rat(0));
    ExactPolynomial residual = rising_factorial(n);
    // falling_factorial(k) is monic of degree k, so the system is unit
    // triangular: peel off the top coefficient at each step.
    for (unsigned long k = n; k >= 1; --k) {
        Rat ck = residual.coeff(k);
        c[k - 1] = ck;
        if (ck != 0) residual = residual - falling_factorial(k) * ck;
    }
    if (!residual.is_zero())
        throw std::logic_error("rising_in_falling_coefficients: nonzero residual");
    return c;
}

ExactPolynomial from_falling_basis(const std::vector<Rat>& coeffs) {
    ExactPolynomial p;
    for (size_t k = 0; k < coeffs.size(); ++k)
        p = p + falling_factorial(k + 1) * coeffs[k];
    return p;
}

TruncatedSeries lah_generating_series(unsigned long k, unsigned long order) {
    if (k == 0) throw std::domain_error("lah_generating_series: k >= 1 required");
    if (order < k)
        throw std::domain_error("lah_generating_series: order < k leaves only zero coefficients");
    // (x/(1-x))^k = x^k * (1 + x + x^2 + ...)^k, then scale by 1/k!
    TruncatedSeries geo = TruncatedSeries::geometric(order, Rat(1));
    TruncatedSeries s = geo.pow(k).shift_up(k);
    return s * make_rat(1, factorial(k));
}

TruncatedSeries alternating_generating_series(unsigned long k, unsigned long order) {
    if (k == 0) throw std::domain_error("alternating_generating_series: k >= 1 required");
    if (order < k)
        throw std::domain_error(
            "alternating_generating_series: order < k leaves only zero coefficients");
    TruncatedSeries geo = TruncatedSeries::geometric(order, Rat(-1));  // 1/(1+x)
    TruncatedSeries s = geo.pow(k).shift_up(k);
    Rat scale = make_rat(1, factorial(k));
    if (k % 2 == 1) scale = -scale;
    return s * scale;
}

Rat LaurentExpDerivative::laurent_sum(const Rat& x) const {
    if (x == 0) throw std::domain_error("LaurentExpDerivative: x = 0");
    Rat acc(0);
    for (const auto& [exponent, c] : coeffs) acc += c / pow_rat(x, exponent);
    return acc;
}

double LaurentExpDerivative::evaluate(double x) const {
    Rat xr(x);  // binary doubles convert to exact rationals
    return std::exp(static_cast<double>(sign) / x) * laurent_sum(xr).get_d();
}

LaurentExpDerivative exp_reciprocal_derivative(unsigned long n, int sign) {
    if (n == 0) throw std::domain_error("exp_reciprocal_derivative: n >= 1 required");
    if (sign != 1 && sign != -1)
        throw std::domain_error("exp_reciprocal_derivative: sign must be +1 or -1");
    std::map<unsigned long, Rat> cur;
    cur[0] = Rat(1);  // the underived function itself
    Rat s(sign);
    for (unsigned long step = 0; step < n; ++step) {
        std::map<unsigned long, Rat> next;
        for (const auto& [j, c] : cur) {
            next[j + 2] += -s * c;
            if (j > 0) next[j + 1] += Rat(-static_cast<long>(j)) * c;
        }
        cur.clear();
        for (auto& [j, c] : next)
            if (c != 0) cur.emplace(j, std::move(c));
    }
    return LaurentExpDerivative{n, sign, std::move(cur)};
}

}  // namespace lah
