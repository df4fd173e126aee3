#pragma once

#include <vector>

#include "lah/arith.hpp"

namespace lah {

/// Formal power series with exact rational coefficients, truncated after
/// x^order.  All arithmetic truncates consistently at the common order.
class TruncatedSeries {
  public:
    /// Zero series of the given order.
    explicit TruncatedSeries(unsigned long order);
    TruncatedSeries(unsigned long order, std::vector<Rat> coeffs);

    unsigned long order() const { return order_; }
    const Rat& coeff(unsigned long n) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    static TruncatedSeries constant(unsigned long order, const Rat& c);
    /// 1 + x + x^2 + ... (ratio +1) or 1 - x + x^2 - ... (ratio -1), etc.
    static TruncatedSeries geometric(unsigned long order, const Rat& ratio);

    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator-(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const Rat& scalar) const;
    /// Division by a series with nonzero constant term, exact to `order`.
    TruncatedSeries operator/(const TruncatedSeries& den) const;
    bool operator==(const TruncatedSeries& other) const = default;

    TruncatedSeries pow(unsigned long e) const;
    /// Multiplies by x^k, shifting coefficients up and truncating.
    TruncatedSeries shift_up(unsigned long k) const;

  private:
    void check_same_order(const TruncatedSeries& other) const;
    unsigned long order_;
    std::vector<Rat> coeffs_;  // size order_+1
};

}  // namespace lah
