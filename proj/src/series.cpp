#include "lah/series.hpp"

#include <stdexcept>

namespace lah {

TruncatedSeries::TruncatedSeries(unsigned long order)
    : order_(order), coeffs_(order + 1, Rat(0)) {}

TruncatedSeries::TruncatedSeries(unsigned long order, std::vector<Rat> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, Rat(0));
}

const Rat& TruncatedSeries::coeff(unsigned long n) const {
    if (n > order_) throw std::domain_error("TruncatedSeries::coeff: beyond truncation order");
    return coeffs_[n];
}

TruncatedSeries TruncatedSeries::constant(unsigned long order, const Rat& c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::geometric(unsigned long order, const Rat& ratio) {
    TruncatedSeries s(order);
    Rat t(1);
    for (unsigned long n = 0; n <= order; ++n) {
        s.coeffs_[n] = t;
        t *= ratio;
    }
    return s;
}

void TruncatedSeries::check_same_order(const TruncatedSeries& other) const {
    if (order_ != other.order_)
        throw std::domain_error("TruncatedSeries: mixed truncation orders");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    check_same_order(other);
    TruncatedSeries out(order_);
    for (unsigned long n = 0; n <= order_; ++n) out.coeffs_[n] = coeffs_[n] + other.coeffs_[n];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
    check_same_order(other);
    TruncatedSeries out(order_);
    for (unsigned long n = 0; n <= order_; ++n) out.coeffs_[n] = coeffs_[n] - other.coeffs_[n];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    check_same_order(other);
    TruncatedSeries out(order_);
    for (unsigned long i = 0; i <= order_; ++i) {
        if (coeffs_[i] == 0) continue;
        for (unsigned long j = 0; i + j <= order_; ++j)
            out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const Rat& scalar) const {
    TruncatedSeries out(order_);
    for (unsigned long n = 0; n <= order_; ++n) out.coeffs_[n] = coeffs_[n] * scalar;
    return out;
}

TruncatedSeries TruncatedSeries::operator/(const TruncatedSeries& den) const {
    check_same_order(den);
    if (den.coeffs_[0] == 0)
        throw std::domain_error("TruncatedSeries: division needs nonzero constant term");
    TruncatedSeries out(order_);
    for (unsigned long n = 0; n <= order_; ++n) {
        Rat acc = coeffs_[n];
        for (unsigned long j = 1; j <= n; ++j) acc -= den.coeffs_[j] * out.coeffs_[n - j];
        out.coeffs_[n] = acc / den.coeffs_[0];
    }
    return out;
}

TruncatedSeries TruncatedSeries::pow(unsigned long e) const {
    TruncatedSeries out = constant(order_, Rat(1));
    for (unsigned long i = 0; i < e; ++i) out = out * *this;
    return out;
}

TruncatedSeries TruncatedSeries::shift_up(unsigned long k) const {
    TruncatedSeries out(order_);
    for (unsigned long n = 0; n + k <= order_; ++n) out.coeffs_[n + k] = coeffs_[n];
    return out;
}

}  // namespace lah
