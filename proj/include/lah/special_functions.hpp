#pragma once

#include "lah/arith.hpp"

namespace lah {

/// A truncated-series evaluation together with the bound that justified
/// stopping: tail_bound <= the tolerance requested from the evaluator.
struct SeriesValue {
    double value = 0.0;
    int terms_used = 0;
    double tail_bound = 0.0;
};

inline constexpr int kDefaultMaxSeriesTerms = 10000;

/// Modified Bessel function I_1(z) = sum_{k>=0} (z/2)^{2k+1} / (k! (k+1)!)
/// for z >= 0, summed until the geometric tail bound drops below tol.
/// Throws tolerance_unreachable_error when max_terms is hit first.
SeriesValue bessel_i1(double z, double tol, int max_terms = kDefaultMaxSeriesTerms);

/// 1F2(1; k+1, k+2; t) = sum_{n>=0} t^n / ((k+1)_n (k+2)_n), t >= 0.
/// The Pochhammer factors advance by exact integer steps.
SeriesValue hypergeom_1f2(unsigned long k, double t, double tol,
                          int max_terms = kDefaultMaxSeriesTerms);

/// H_k(z) = e^{1/z} - sum_{m=0}^{k} z^{-m}/m!, z != 0.
double h_k_closed_form(unsigned long k, double z);

}  // namespace lah
