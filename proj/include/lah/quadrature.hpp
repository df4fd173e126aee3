#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace lah {

// Outcome of a semi-infinite integration.  `error_estimate` combines the
// summed panel disagreements on [0, truncation_point] (each floored at the
// double-precision rounding level of the panel, so the estimate stays honest
// when the disagreement cancels to noise) with the analytic bound on the
// discarded tail; it is a defensible bound on the total error, not just on
// the finite part.
struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    double truncation_point = 0.0;
    long evaluations = 0;
};

struct QuadratureOptions {
    double initial_truncation = 1.0;
    double max_truncation = 1e9;
    long max_evaluations = 200000;
};

// Thrown when the requested tolerance cannot be certified within the
// evaluation budget (or the tail bound never drops below it).  Carries the
// best result obtained so far so callers can report partial progress.
class quadrature_error : public std::runtime_error {
  public:
    quadrature_error(const std::string& what_arg, QuadratureResult partial)
        : std::runtime_error(what_arg), partial_(partial) {}

    const QuadratureResult& partial() const noexcept { return partial_; }

  private:
    QuadratureResult partial_;
};

// Exact value of the upper incomplete-gamma integral
//   integral_T^inf t^p e^{-c t} dt
//     = (p! / c^{p+1}) e^{-c T} sum_{j=0}^{p} (c T)^j / j!
// for integer p >= 0, c > 0, T >= 0.  Used as a closed-form tail bound.
double gamma_tail_upper(unsigned long p, double c, double T);

// Tail-bound function T -> bound on  integral_T^inf A t^p e^{2 sqrt t} e^{-c t} dt.
// For T >= 1 with c sqrt(T) >= 4 + safety margin, 2 sqrt(t) <= (2/sqrt(T)) t on
// [T, inf), so the integrand is majorised by A t^p e^{-c' t} with
// c' = c - 2/sqrt(T) >= c/2 and the gamma tail applies.  Below that threshold
// the returned bound is +inf, which forces the truncation search to grow T.
std::function<double(double)> exp_sqrt_tail_bound(unsigned long p, double c, double A);

// Tail-bound function for a plain gamma-type integrand A t^p e^{-c t}
// (exact, valid for every T >= 0).
std::function<double(double)> gamma_tail_bound(unsigned long p, double c, double A);

// Smallest truncation point of the form max(1, initial) * 2^m whose tail
// bound is <= half_tol.  Throws quadrature_error if max_truncation is hit
// first.  Exposed so callers can size per-point tolerances of the integrand
// before integrating; integrate_semi_infinite repeats the same search and
// therefore lands on the same T.
double select_truncation_point(const std::function<double(double)>& tail_bound,
                               double half_tol,
                               const QuadratureOptions& options = {});

// Adaptive Gauss(7)/Kronrod(15) integration of f over [0, inf):
//  1. grow T until tail_bound(T) <= tol/2,
//  2. split [0, T] dyadically and refine the panel with the largest
//     Kronrod-Gauss disagreement until the summed disagreement is <= tol/2.
// The returned error_estimate (panel disagreement + tail bound) is <= tol on
// success.  Enlarging max_evaluations never changes a successful result: the
// refinement order is deterministic and stops on the tolerance test.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         const std::function<double(double)>& tail_bound,
                                         double tol,
                                         const QuadratureOptions& options = {});

}  // namespace lah
