#include "lah/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lah {

namespace {

// Compensated (Kahan) accumulator; the quadrature layer asks these series
// for tolerances well below 1e-10, so plain summation is too lossy.
struct Compensated {
    double sum = 0.0;
    double carry = 0.0;

    void add(double term) {
        double y = term - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Shared driver for positive-term series with term ratio ratio(k) that is
// eventually below 1/2: once it is, the tail is bounded by
// next_term / (1 - ratio).
template <typename RatioFn>
SeriesValue sum_positive_series(double first_term, RatioFn ratio, double tol, int max_terms,
                                const char* name) {
    Compensated acc;
    double term = first_term;
    acc.add(term);
    for (int k = 0; k < max_terms; ++k) {
        double r = ratio(k);
        double next = term * r;
        if (r < 0.5) {
            double tail = next / (1.0 - r);
            if (tail < tol) return SeriesValue{acc.sum, k + 1, tail};
        }
        acc.add(next);
        term = next;
    }
    throw tolerance_unreachable_error(std::string(name) + ": tolerance " + std::to_string(tol) +
                                      " unreachable in " + std::to_string(max_terms) +
                                      " terms (partial sum " + std::to_string(acc.sum) + ")");
}

}  // namespace

SeriesValue bessel_i1(double z, double tol, int max_terms) {
    if (z < 0) throw std::domain_error("bessel_i1: z >= 0 required");
    if (tol <= 0) throw std::domain_error("bessel_i1: tol > 0 required");
    if (z == 0) return SeriesValue{0.0, 1, 0.0};
    double h = 0.5 * z;
    double h2 = h * h;
    // term_{k+1}/term_k = (z/2)^2 / ((k+1)(k+2))
    return sum_positive_series(
        h, [h2](int k) { return h2 / (double(k + 1) * double(k + 2)); }, tol, max_terms,
        "bessel_i1");
}

SeriesValue hypergeom_1f2(unsigned long k, double t, double tol, int max_terms) {
    if (t < 0) throw std::domain_error("hypergeom_1f2: t >= 0 required");
    if (tol <= 0) throw std::domain_error("hypergeom_1f2: tol > 0 required");
    if (t == 0) return SeriesValue{1.0, 1, 0.0};
    // term_{n+1}/term_n = t / ((k+1+n)(k+2+n)); the two factors are exact
    // integers, so each ratio is one rounding away from exact.
    return sum_positive_series(
        1.0,
        [k, t](int n) {
            unsigned long a = k + 1 + static_cast<unsigned long>(n);
            unsigned long b = k + 2 + static_cast<unsigned long>(n);
            return t / (double(a) * double(b));
        },
        tol, max_terms, "hypergeom_1f2");
}

double h_k_closed_form(unsigned long k, double z) {
    if (z == 0) throw std::domain_error("h_k_closed_form: z != 0");
    Compensated acc;
    acc.add(std::exp(1.0 / z));
    double term = 1.0;  // z^{-m}/m! starting at m = 0
    for (unsigned long m = 0; m <= k; ++m) {
        acc.add(-term);
        term /= z * double(m + 1);
    }
    return acc.sum;
}

}  // namespace lah
