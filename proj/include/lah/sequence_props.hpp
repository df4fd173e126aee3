#pragma once

#include <vector>

#include "lah/arith.hpp"
#include "lah/polynomial.hpp"

namespace lah {

// Forward finite differences of a sequence read with 1-based indexing
// (seq[0] holds mu_1).  diff(k, n) is Delta^k mu_n, built by the recursion
// Delta^{k+1} mu_n = Delta^k mu_{n+1} - Delta^k mu_n.
class DifferenceTable {
  public:
    explicit DifferenceTable(std::vector<Int> base);

    unsigned long size() const { return rows_.empty() ? 0 : rows_[0].size(); }

    // Requires n >= 1 and n + k <= size() (the difference consumes entries
    // mu_n .. mu_{n+k}).
    const Int& diff(unsigned long k, unsigned long n) const;

  private:
    std::vector<std::vector<Int>> rows_;  // rows_[k][n-1] = Delta^k mu_n
};

// Direct alternating-binomial evaluation
//   Delta^k mu_n = sum_{j=0}^{k} (-1)^{k-j} C(k,j) mu_{n+j},
// independent of the table recursion; the two are cross-checked in tests.
Int finite_difference(const std::vector<Int>& seq, unsigned long k, unsigned long n);

struct ConvexityViolation {
    unsigned long n;  // 1-based start index of the offending difference
    unsigned long k;  // half the difference order (Delta^{2k})
    Int value;        // the negative difference itself
};

// Every (n, k) with n + 2k <= max_total (and inside the sequence) where
// Delta^{2k} mu_n < 0, in (k, n) order.  An empty result certifies absolute
// convexity of the prefix; the k = 0 row covers plain non-negativity.
std::vector<ConvexityViolation> absolute_convexity_check(const std::vector<Int>& seq,
                                                         unsigned long max_total);

// Ordinary convexity: Delta^2 mu_n >= 0 for all n with n + 2 <= window.
// Windows shorter than 3 impose no constraint and return true.
bool convexity_check(const std::vector<Int>& seq, unsigned long window);

// Distinct real roots of p on each side of the origin, counted exactly with
// a Sturm chain over the rationals (chain elements are reduced to primitive
// integer form by positive scalings, which preserve every sign evaluation).
// Requires p != 0 and p(0) != 0.
struct RealRootCounts {
    unsigned long negative = 0;  // distinct roots in (-inf, 0)
    unsigned long positive = 0;  // distinct roots in (0, +inf)
};
RealRootCounts count_real_roots(const ExactPolynomial& p);

// Exact certificate for the n = m row polynomial sum_k L(m,k) x^k: all roots
// real, one simple root at 0 and the rest simple and negative.  `all_real`
// is only certified when `distinct` holds (the Sturm count is of distinct
// roots, so multiplicities would otherwise hide missing ones).
struct RootCertificate {
    unsigned long m = 0;
    unsigned long root_count_zero = 0;      // multiplicity of the root at 0
    unsigned long root_count_negative = 0;  // distinct roots in (-inf, 0)
    unsigned long root_count_positive = 0;  // distinct roots in (0, +inf)
    bool distinct = false;                  // gcd(p, p') is constant
    bool all_real = false;
};
RootCertificate root_certificate(unsigned long m);

}  // namespace lah
